#include "zgcu/independence.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <mutex>
#include <random>

#include "zgcu/classes.hpp"
#include "zgcu/error.hpp"

namespace zgcu {

std::string to_string(IndependenceStatus s) {
  switch (s) {
    case IndependenceStatus::Independent: return "independent";
    case IndependenceStatus::Dependent: return "dependent";
    case IndependenceStatus::Unresolved: return "unresolved";
  }
  return "unknown";
}

namespace {

using Big = boost::multiprecision::mpfr_float;

// Commutative algebra spanned by the R-class sums S_0..S_{r-1}, with
// S_a S_b = sum_c C(a, b, c) S_c.
class SymmetricCenter {
 public:
  explicit SymmetricCenter(const FiniteGroup& g) {
    const ClassStructure cs = class_structure(g);
    classes_ = cs.r_classes;
    class_of_ = cs.r_class_of;
    r_ = classes_.size();
    c_.assign(r_ * r_ * r_, 0);
    for (std::size_t c = 0; c < r_; ++c) {
      const Element z = classes_[c].front();
      for (Element x = 0; x < g.order(); ++x) {
        const Element y = g.mul(g.inv(x), z);
        ++c_[(class_of_[x] * r_ + class_of_[y]) * r_ + c];
      }
    }
  }

  std::size_t rank() const { return r_; }
  std::int64_t constant(std::size_t a, std::size_t b, std::size_t c) const {
    return c_[(a * r_ + b) * r_ + c];
  }
  const std::vector<std::vector<Element>>& classes() const { return classes_; }

  template <typename T>
  std::vector<T> mul(const std::vector<T>& p, const std::vector<T>& q) const {
    std::vector<T> out(r_, T(0));
    for (std::size_t a = 0; a < r_; ++a) {
      if (p[a] == 0) continue;
      for (std::size_t b = 0; b < r_; ++b) {
        if (q[b] == 0) continue;
        const T pq = p[a] * q[b];
        for (std::size_t c = 0; c < r_; ++c)
          if (const auto k = constant(a, b, c); k != 0) out[c] += pq * T(k);
      }
    }
    return out;
  }

 private:
  std::size_t r_ = 0;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::int64_t> c_;
};

std::size_t argmax_abs(const std::vector<double>& v) {
  std::size_t j = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[j])) j = i;
  return j;
}

// Approximate primitive idempotents from a random symmetric central separator, or an empty
// result when the draw has a repeated or non-real spectrum.
std::vector<std::vector<double>> approximate_idempotents(const SymmetricCenter& z, std::mt19937_64& rng) {
  const std::size_t r = z.rank();
  std::uniform_int_distribution<int> weight(-9, 9);
  std::vector<int> w(r);
  for (auto& x : w) x = weight(rng);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(b)) +=
            w[a] * static_cast<double>(z.constant(a, b, c));
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) return {};
  const auto values = es.eigenvalues();
  double scale = 1;
  for (Eigen::Index i = 0; i < values.size(); ++i) scale = std::max(scale, std::abs(values[i]));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::abs(values[i].imag()) > 1e-9 * scale) return {};
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(values[i].real() - values[j].real()) < 1e-6 * scale) return {};
  }
  std::vector<std::vector<double>> out;
  std::vector<double> total(r, 0.0);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    std::vector<double> v(r);
    for (std::size_t c = 0; c < r; ++c) v[c] = es.eigenvectors()(static_cast<Eigen::Index>(c), i).real();
    const auto sq = z.mul(v, v);
    const std::size_t j = argmax_abs(v);
    const double s = sq[j] / v[j];
    if (!std::isfinite(s) || s == 0) return {};
    for (auto& x : v) x /= s;
    for (std::size_t c = 0; c < r; ++c) total[c] += v[c];
    out.push_back(std::move(v));
  }
  // The idempotents must sum to the identity, which is S_0.
  for (std::size_t c = 0; c < r; ++c)
    if (std::abs(total[c] - (c == 0 ? 1.0 : 0.0)) > 1e-6) return {};
  return out;
}

std::vector<Big> refine(const SymmetricCenter& z, const std::vector<double>& f0, const Big& tol) {
  std::vector<Big> f(f0.begin(), f0.end());
  for (int it = 0; it < 400; ++it) {
    const auto f2 = z.mul(f, f);
    Big residual = 0;
    for (std::size_t c = 0; c < f.size(); ++c) residual = std::max(residual, Big(abs(f2[c] - f[c])));
    if (residual < tol) break;
    const auto f3 = z.mul(f2, f);
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = 3 * f2[c] - 2 * f3[c];
  }
  return f;
}

std::mutex precision_mutex;

}  // namespace

IndependenceReport verify_independence(const std::vector<GroupRingElement>& units,
                                       const IndependenceOptions& options) {
  IndependenceReport rep;
  if (units.empty()) return rep;
  const GroupPtr& gp = units.front().group();
  const FiniteGroup& g = *gp;
  const SymmetricCenter z(g);
  const std::size_t r = z.rank();
  rep.real_components = r;

  // Coordinates of u u* in the R-class basis, exact.
  std::vector<std::vector<Integer>> norms;
  double max_log10 = 0;
  for (const auto& u : units) {
    if (u.group() != gp) fail(ErrorKind::GroupMismatch, "units belong to different groups");
    const GroupRingElement w = u * u.involution();
    std::vector<Integer> coords(r);
    for (std::size_t c = 0; c < r; ++c) {
      const Rational v = w.coeff(z.classes()[c].front());
      for (Element x : z.classes()[c])
        if (w.coeff(x) != v) fail(ErrorKind::InvalidInput, "independence test needs central units");
      if (!is_integral(v)) fail(ErrorKind::InvalidInput, "independence test needs integral units");
      coords[c] = v.get_num();
      if (sgn(coords[c]) != 0)
        max_log10 = std::max(max_log10, static_cast<double>(mpz_sizeinbase(coords[c].get_mpz_t(), 10)));
    }
    norms.push_back(std::move(coords));
  }

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<double>> approx;
  for (unsigned attempt = 0; attempt < 64 && approx.empty(); ++attempt) {
    approx = approximate_idempotents(z, rng);
    if (approx.empty()) ++rep.separator_retries;
  }
  if (approx.empty()) {
    rep.status = IndependenceStatus::Unresolved;
    rep.detail = "no separating central element found";
    return rep;
  }

  std::lock_guard<std::mutex> lock(precision_mutex);
  const unsigned saved = Big::default_precision();
  unsigned digits = static_cast<unsigned>(max_log10 + std::log10(static_cast<double>(g.order()) + 1)) + 40;
  std::vector<double> dims(r);
  rep.log_vectors.assign(units.size(), std::vector<double>(r, 0.0));
  for (;;) {
    Big::default_precision(digits);
    const Big tol = pow(Big(10), -static_cast<int>(digits - 10));
    bool resolved = true;
    for (std::size_t i = 0; i < r && resolved; ++i) {
      const auto f = refine(z, approx[i], tol);
      dims[i] = static_cast<double>(f[0] * g.order());
      std::size_t j = 0;
      for (std::size_t c = 1; c < r; ++c)
        if (abs(f[c]) > abs(f[j])) j = c;
      for (std::size_t u = 0; u < units.size() && resolved; ++u) {
        std::vector<Big> w(norms[u].size());
        for (std::size_t c = 0; c < r; ++c) w[c] = Big(norms[u][c].get_mpz_t());
        const auto wf = z.mul(w, f);
        const Big lambda = wf[j] / f[j];
        // Rounding in the product is bounded by the absolute sum of its terms times tol.
        Big bound = 0;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            if (const auto k = z.constant(a, b, j); k != 0) bound += abs(w[a]) * abs(f[b]) * k;
        bound = bound * tol / abs(f[j]);
        if (lambda <= 0 || bound > abs(lambda) * Big(1e-25)) {
          resolved = false;
          break;
        }
        rep.log_vectors[u][i] = static_cast<double>(log(lambda) / 2);
      }
    }
    if (resolved) break;
    if (digits >= options.max_digits) {
      Big::default_precision(saved);
      rep.status = IndependenceStatus::Unresolved;
      rep.detail = "eigenvalues not resolved within the precision cap";
      rep.digits = digits;
      return rep;
    }
    digits = std::min(options.max_digits, digits * 2);
  }
  Big::default_precision(saved);
  rep.digits = digits;

  // log |det L_u| = sum over components of dim * log |lambda| must vanish for a unit.
  for (const auto& v : rep.log_vectors) {
    double s = 0, mag = 0;
    for (std::size_t i = 0; i < r; ++i) {
      s += dims[i] * v[i];
      mag += std::abs(dims[i] * v[i]);
    }
    if (std::abs(s) > 1e-9 * std::max(1.0, mag)) {
      rep.status = IndependenceStatus::Unresolved;
      rep.detail = "log-determinant check failed; not a unit of ZG";
      return rep;
    }
  }

  Eigen::MatrixXd m(static_cast<Eigen::Index>(units.size()), static_cast<Eigen::Index>(r));
  for (std::size_t u = 0; u < units.size(); ++u)
    for (std::size_t i = 0; i < r; ++i)
      m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(i)) = rep.log_vectors[u][i];
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto sv = svd.singularValues();
  rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = sv.size() ? sv[0] : 0.0;
  const double smin = units.size() > r ? 0.0 : sv[sv.size() - 1];
  rep.sigma_ratio = smax > 0 ? smin / smax : 0.0;
  for (double s : rep.singular_values)
    if (smax > 0 && s >= options.pass_threshold * smax) ++rep.numerical_rank;
  if (rep.sigma_ratio >= options.pass_threshold)
    rep.status = IndependenceStatus::Independent;
  else if (rep.sigma_ratio < options.fail_threshold)
    rep.status = IndependenceStatus::Dependent;
  else
    rep.status = IndependenceStatus::Unresolved;
  return rep;
}

}  // namespace zgcu
