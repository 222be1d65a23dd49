#include "qseries/scalar.hpp"

#include <cmath>
#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

void Truncation::validate() const {
  if (!(eps > 0) || !std::isfinite(eps)) throw DomainError("truncation: eps must be positive");
  if (max_terms < 1) throw DomainError("truncation: max_terms must be at least 1");
  if (consecutive_small < 1) throw DomainError("truncation: consecutive_small must be at least 1");
}

QBase::QBase(Complex q) : q_(q) {
  if (!(std::abs(q) < 1)) {
    std::ostringstream os;
    os << "q: |q| must be < 1, got |q| = " << std::abs(q);
    throw DomainError(os.str());
  }
}

}  // namespace qseries
