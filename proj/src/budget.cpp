#include "amalgrade/budget.hpp"

namespace amalgrade {

namespace {
thread_local long long t_used = 0;
thread_local long long t_limit = -1; // -1: unlimited
thread_local int t_depth = 0;
} // namespace

BudgetScope::BudgetScope(long long limit) {
    owner_ = (t_depth == 0);
    saved_used_ = t_used;
    saved_limit_ = t_limit;
    if (owner_) {
        t_used = 0;
        t_limit = limit;
    }
    // Nested scopes keep the outer limit; they may not extend it.
    ++t_depth;
}

BudgetScope::~BudgetScope() {
    --t_depth;
    if (owner_) {
        t_used = saved_used_;
        t_limit = saved_limit_;
    }
}

namespace budget {

void tick(long long n) {
    t_used += n;
    if (t_limit >= 0 && t_used > t_limit)
        throw ResourceError("step budget exhausted", t_used);
}

long long used() { return t_used; }

} // namespace budget

namespace {
thread_local long long t_spairs = 0;
thread_local long t_max_bits = 0;
} // namespace

namespace stats {

void reset() {
    t_spairs = 0;
    t_max_bits = 0;
}

void note_spair() { ++t_spairs; }

void note_coeff_bits(long bits) {
    if (bits > t_max_bits) t_max_bits = bits;
}

long long spairs() { return t_spairs; }
long max_coeff_bits() { return t_max_bits; }

} // namespace stats

} // namespace amalgrade
