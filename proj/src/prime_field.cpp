#include "toricrep/prime_field.hpp"

namespace toricrep {

thread_local std::uint64_t PrimeScalar::modulus_ = 0;

}  // namespace toricrep
