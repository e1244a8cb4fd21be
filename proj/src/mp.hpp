#pragma once

// Extended-precision real types for sums that cancel catastrophically in double.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hypgreen::mp {

using Real50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                             boost::multiprecision::et_off>;
using Real100 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                              boost::multiprecision::et_off>;
using Real200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>,
                                              boost::multiprecision::et_off>;
using Real400 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>,
                                              boost::multiprecision::et_off>;

} // namespace hypgreen::mp
