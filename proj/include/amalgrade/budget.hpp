#pragma once

#include "amalgrade/errors.hpp"

namespace amalgrade {

// Step accounting for the symbolic engines. One "step" is one reduction
// subtraction or one S-pair considered; cheap bookkeeping is not charged.
//
// A BudgetScope installs a limit for the current thread; nested scopes share
// the outermost counter so a sub-computation cannot reset the clock. With no
// scope installed, steps are still counted (for reporting) but never limited.
class BudgetScope {
public:
    explicit BudgetScope(long long limit);
    ~BudgetScope();

    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

private:
    bool owner_;
    long long saved_used_;
    long long saved_limit_;
};

namespace budget {

// Charge n steps against the active scope; throws ResourceError past the limit.
void tick(long long n = 1);

// Steps charged so far in the innermost owning scope (or since start of thread).
long long used();

} // namespace budget

// Thread-local kernel counters for run reports: S-pairs actually processed
// and the largest coefficient (in bits) ever inserted into a basis. Purely
// observational; nothing reads them back into the algorithms.
namespace stats {

void reset();
void note_spair();
void note_coeff_bits(long bits);

long long spairs();
long max_coeff_bits();

} // namespace stats

inline constexpr long long kDefaultBudget = 5'000'000;

} // namespace amalgrade
