#ifndef DGRE_SOPF_HPP
#define DGRE_SOPF_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgre/counters.hpp"
#include "dgre/symbol.hpp"

namespace dgre {

// A concatenation of symbols: one start-to-finish path, or a fragment of
// one after mutation. Never empty.
class ProductTerm {
public:
    explicit ProductTerm(std::vector<Symbol> symbols);
    ProductTerm(std::initializer_list<Symbol> symbols) : ProductTerm(std::vector<Symbol>(symbols)) {}

    // Builds a term from single-character symbols, e.g. "abc".
    static ProductTerm compact(std::string_view chars);

    std::span<const Symbol> symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const Symbol& front() const { return symbols_.front(); }
    const Symbol& back() const { return symbols_.back(); }

    friend bool operator==(const ProductTerm&, const ProductTerm&) = default;

private:
    std::vector<Symbol> symbols_;
};

// Canonical order: shorter terms first, then lexicographic by symbol ids.
// Counts one symbol comparison per pair of symbols examined.
bool canonical_less(const ProductTerm& a, const ProductTerm& b, OpCounters* ctr = nullptr);

// The search string of pt/ht/tt; one or two symbols.
class TermPattern {
public:
    explicit TermPattern(Symbol s) : symbols_{std::move(s)} {}
    TermPattern(Symbol first, Symbol second);

    std::span<const Symbol> symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }

private:
    std::vector<Symbol> symbols_;
};

// Position of the first (last) occurrence of pattern in term, or npos.
std::size_t find_first(const ProductTerm& term, const TermPattern& pattern, OpCounters* ctr = nullptr);
std::size_t find_last(const ProductTerm& term, const TermPattern& pattern, OpCounters* ctr = nullptr);

// A regular expression in sum-of-products format with star-free terms:
// a duplicate-free set of product terms held in canonical order.
class SopfRe {
public:
    SopfRe() = default;
    // Canonicalizes: sorts and drops duplicates.
    explicit SopfRe(std::vector<ProductTerm> terms, OpCounters* ctr = nullptr);
    SopfRe(std::initializer_list<ProductTerm> terms) : SopfRe(std::vector<ProductTerm>(terms)) {}

    // Builds from compact single-character spellings, e.g. {"ab", "c"}.
    static SopfRe compact(std::initializer_list<std::string_view> terms);

    std::span<const ProductTerm> terms() const& { return terms_; }
    std::span<const ProductTerm> terms() const&& = delete;
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    bool contains(const ProductTerm& t, OpCounters* ctr = nullptr) const;

    // Adopts terms already in strictly increasing canonical order.
    static SopfRe from_sorted(std::vector<ProductTerm> terms);

    friend bool operator==(const SopfRe&, const SopfRe&) = default;

private:
    std::vector<ProductTerm> terms_;
};

// Terms of r containing s as a contiguous substring.
SopfRe pt(const SopfRe& r, const TermPattern& s, OpCounters* ctr = nullptr);
// Prefixes of the terms of p, cut right after the first occurrence of s.
// Throws if a term of p does not contain s.
SopfRe ht(const SopfRe& p, const TermPattern& s, OpCounters* ctr = nullptr);
// Suffixes of the terms of p, starting at the last occurrence of s.
SopfRe tt(const SopfRe& p, const TermPattern& s, OpCounters* ctr = nullptr);

SopfRe set_union(const SopfRe& a, const SopfRe& b, OpCounters* ctr = nullptr);
SopfRe set_difference(const SopfRe& r, const SopfRe& c, OpCounters* ctr = nullptr);
// { x.y : x in a, y in b }. Products are emitted in canonical order and
// duplicates from different split points are dropped as they meet.
SopfRe set_concat(const SopfRe& a, const SopfRe& b, OpCounters* ctr = nullptr);

SopfRe add_term(const SopfRe& r, const ProductTerm& t, OpCounters* ctr = nullptr);
SopfRe remove_term(const SopfRe& r, const ProductTerm& t, OpCounters* ctr = nullptr);

enum class TermStyle {
    automatic, // compact when every symbol is one character, dotted otherwise
    dotted,
};

// "EMPTY", or terms joined by " + ".
std::string print_sopf(const SopfRe& r, TermStyle style = TermStyle::automatic);
std::string print_term(const ProductTerm& t, bool dotted);
// Accepts compact ("abc") and dotted ("ab.cd.e") terms. A dotted term made
// of a single multi-character symbol carries a trailing dot ("node.").
SopfRe parse_sopf(std::string_view text);

} // namespace dgre

#endif
