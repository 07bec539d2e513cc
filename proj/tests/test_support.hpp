#pragma once

#include <doctest.h>

#include "zgcu/group_ring.hpp"

namespace doctest {
template <>
struct StringMaker<zgcu::GroupRingElement> {
  static String convert(const zgcu::GroupRingElement& u) { return u.to_string().c_str(); }
};
}  // namespace doctest
