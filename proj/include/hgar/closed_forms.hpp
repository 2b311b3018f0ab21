#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgar/binomial.hpp"
#include "hgar/pattern.hpp"

namespace hgar {

/// How far a closed form is known to be exact.
enum class Applicability {
    exact,        ///< holds for the given parameters
    asymptotic,   ///< holds once n exceeds an unquantified threshold
    extrapolated, ///< formula evaluated outside the parameter range it is stated for
};

std::string to_string(Applicability a);

struct FormulaValue {
    BigInt value;
    Applicability applicability = Applicability::asymptotic;
};

/// Raised when a closed form depends on a symbol whose value is not determined.
class UnresolvedSymbolError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Half-length used by the anti-Ramsey formulas: k/2 for even k, (k-1)/2 for odd k.
unsigned ar_half_length(unsigned k);
/// floor((k-1)/2), the core size of the Turan-number formulas.
unsigned turan_core_size(unsigned k);

/// Anti-Ramsey number of loose paths and loose cycles with k >= 4 edges, r >= 3.
FormulaValue ar_loose(unsigned n, unsigned r, unsigned k);

/// Anti-Ramsey number of linear paths and linear cycles with k >= 4 edges, r >= 3.
FormulaValue ar_linear(unsigned n, unsigned r, unsigned k);

/// 2 for k = 2 (n >= 3r-4), 3 for k = 3 (n >= 4r-3). Throws std::out_of_range below the threshold.
FormulaValue ar_short_path(unsigned n, unsigned r, unsigned k);

/// Turan number of linear paths or cycles. k = 3 is evaluated but tagged extrapolated.
FormulaValue ex_linear(unsigned n, unsigned r, unsigned k, Shape shape);

/// Turan number of loose paths or cycles. The k = 4 cycle case needs `s` and throws
/// UnresolvedSymbolError without it. k = 2 is rejected: the form gives 1, not a matching.
FormulaValue ex_loose(unsigned n, unsigned r, unsigned k, Shape shape, std::optional<unsigned> s = std::nullopt);

/// (k-1) n / 2 as an exact rational; callers floor it themselves.
BigRational eg_bound(unsigned n, unsigned k);

/// ex + 2, the colouring lower bound from a Turan number of the edge-deleted family.
FormulaValue obs_lower_bound(const FormulaValue& ex_value);
FormulaValue obs_lower_bound(const BigInt& ex_value);

struct AuditGrid {
    std::vector<unsigned> r_values{3, 4, 5};
    unsigned k_min = 4;
    unsigned k_max = 9;
    unsigned n_max = 60; ///< n runs over [k*r, n_max]
};

struct AuditViolation {
    unsigned n = 0;
    unsigned r = 0;
    unsigned k = 0;
    std::string identity;
    std::string detail;
};

struct AuditReport {
    std::size_t points = 0;
    std::size_t checks = 0;
    std::vector<AuditViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Per grid point: ar_loose(k) = ex_loose(k-1, path) + 2, ar_linear(k) = ex_linear(k-1, path) + 2,
/// ar_loose <= ar_linear, nonnegativity, monotonicity in n, and the bridge between the two
/// half-length conventions.
AuditReport consistency_audit(const AuditGrid& grid);

} // namespace hgar
