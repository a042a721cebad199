#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qlab {

using BigInt = boost::multiprecision::cpp_int;

} // namespace qlab
