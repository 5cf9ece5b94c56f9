#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace stringy {

/// Unbounded exact integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

/// Exponent of u, v or t = uv. Never negative.
using Exponent = std::uint64_t;

}  // namespace stringy
