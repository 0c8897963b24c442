#ifndef NABLAKIT_NUMBERS_HPP
#define NABLAKIT_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace nablakit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace nablakit

#endif
