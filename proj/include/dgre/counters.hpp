#ifndef DGRE_COUNTERS_HPP
#define DGRE_COUNTERS_HPP

#include <cstdint>

namespace dgre {

// Primitive-operation tallies. A measurement context is passed by pointer
// through the term algebra; a null pointer disables counting.
struct OpCounters {
    std::uint64_t symbol_comparisons = 0;
    std::uint64_t term_copies = 0;
    std::uint64_t set_lookups = 0;

    // The cost proxy used for growth fitting.
    std::uint64_t cost() const { return symbol_comparisons + term_copies; }

    OpCounters& operator+=(const OpCounters& o) {
        symbol_comparisons += o.symbol_comparisons;
        term_copies += o.term_copies;
        set_lookups += o.set_lookups;
        return *this;
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

} // namespace dgre

#endif
