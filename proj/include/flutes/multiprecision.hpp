#pragma once

// Extended-precision scalars for fans whose endpoints cluster faster than
// double can separate them.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace flutes {

using Float50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                              boost::multiprecision::et_off>;

using Float150 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>,
                                               boost::multiprecision::et_off>;

using Float900 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<900>,
                                               boost::multiprecision::et_off>;

}  // namespace flutes
