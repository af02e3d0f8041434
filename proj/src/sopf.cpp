#include "dgre/sopf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <queue>

namespace dgre {

namespace {

// Three-way canonical comparison; length first, then symbol by symbol.
int canonical_compare(const ProductTerm& a, const ProductTerm& b, OpCounters* ctr) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ctr) ++ctr->symbol_comparisons;
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void count_copy(OpCounters* ctr, std::uint64_t n = 1) {
    if (ctr) ctr->term_copies += n;
}

bool matches_at(const ProductTerm& term, const TermPattern& pattern, std::size_t pos, OpCounters* ctr) {
    auto s = pattern.symbols();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (ctr) ++ctr->symbol_comparisons;
        if (term[pos + k] != s[k]) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Symbol parse_symbol(std::string_view id) {
    if (!is_valid_symbol(id)) throw ParseError("invalid symbol '" + std::string(id) + "'");
    return Symbol(std::string(id));
}

ProductTerm parse_term(std::string_view text) {
    if (text.empty()) throw ParseError("empty term");
    std::vector<Symbol> symbols;
    if (text.find('.') == std::string_view::npos) {
        for (char c : text) symbols.push_back(parse_symbol(std::string_view(&c, 1)));
        return ProductTerm(std::move(symbols));
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t dot = text.find('.', start);
        std::string_view part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (part.empty()) {
            // "node." spells a single multi-character symbol
            if (dot == std::string_view::npos && symbols.size() == 1) break;
            throw ParseError("empty symbol in term '" + std::string(text) + "'");
        }
        symbols.push_back(parse_symbol(part));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return ProductTerm(std::move(symbols));
}

} // namespace

ProductTerm::ProductTerm(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error("product term must contain at least one symbol");
}

ProductTerm ProductTerm::compact(std::string_view chars) {
    std::vector<Symbol> symbols;
    for (char c : chars) symbols.emplace_back(std::string(1, c));
    return ProductTerm(std::move(symbols));
}

bool canonical_less(const ProductTerm& a, const ProductTerm& b, OpCounters* ctr) {
    return canonical_compare(a, b, ctr) < 0;
}

TermPattern::TermPattern(Symbol first, Symbol second) : symbols_{std::move(first), std::move(second)} {}

std::size_t find_first(const ProductTerm& term, const TermPattern& pattern, OpCounters* ctr) {
    if (pattern.size() > term.size()) return std::string::npos;
    for (std::size_t pos = 0; pos + pattern.size() <= term.size(); ++pos)
        if (matches_at(term, pattern, pos, ctr)) return pos;
    return std::string::npos;
}

std::size_t find_last(const ProductTerm& term, const TermPattern& pattern, OpCounters* ctr) {
    if (pattern.size() > term.size()) return std::string::npos;
    for (std::size_t pos = term.size() - pattern.size() + 1; pos-- > 0;)
        if (matches_at(term, pattern, pos, ctr)) return pos;
    return std::string::npos;
}

SopfRe::SopfRe(std::vector<ProductTerm> terms, OpCounters* ctr) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [ctr](const ProductTerm& a, const ProductTerm& b) { return canonical_compare(a, b, ctr) < 0; });
    auto last = std::unique(terms_.begin(), terms_.end(), [ctr](const ProductTerm& a, const ProductTerm& b) {
        return canonical_compare(a, b, ctr) == 0;
    });
    terms_.erase(last, terms_.end());
}

SopfRe SopfRe::compact(std::initializer_list<std::string_view> terms) {
    std::vector<ProductTerm> out;
    for (auto t : terms) out.push_back(ProductTerm::compact(t));
    return SopfRe(std::move(out));
}

SopfRe SopfRe::from_sorted(std::vector<ProductTerm> terms) {
    SopfRe r;
    r.terms_ = std::move(terms);
    return r;
}

bool SopfRe::contains(const ProductTerm& t, OpCounters* ctr) const {
    if (ctr) ++ctr->set_lookups;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                               [ctr](const ProductTerm& a, const ProductTerm& b) { return canonical_compare(a, b, ctr) < 0; });
    return it != terms_.end() && canonical_compare(*it, t, ctr) == 0;
}

SopfRe pt(const SopfRe& r, const TermPattern& s, OpCounters* ctr) {
    std::vector<ProductTerm> out;
    for (const auto& t : r.terms()) {
        if (find_first(t, s, ctr) != std::string::npos) {
            out.push_back(t);
            count_copy(ctr);
        }
    }
    // a subsequence of a canonical sequence is canonical
    return SopfRe::from_sorted(std::move(out));
}

SopfRe ht(const SopfRe& p, const TermPattern& s, OpCounters* ctr) {
    std::vector<ProductTerm> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::size_t pos = find_first(t, s, ctr);
        if (pos == std::string::npos) throw Error("ht: term '" + print_term(t, true) + "' does not contain the pattern");
        auto sym = t.symbols();
        out.emplace_back(std::vector<Symbol>(sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(pos + s.size())));
        count_copy(ctr);
    }
    return SopfRe(std::move(out), ctr);
}

SopfRe tt(const SopfRe& p, const TermPattern& s, OpCounters* ctr) {
    std::vector<ProductTerm> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::size_t pos = find_last(t, s, ctr);
        if (pos == std::string::npos) throw Error("tt: term '" + print_term(t, true) + "' does not contain the pattern");
        auto sym = t.symbols();
        out.emplace_back(std::vector<Symbol>(sym.begin() + static_cast<std::ptrdiff_t>(pos), sym.end()));
        count_copy(ctr);
    }
    return SopfRe(std::move(out), ctr);
}

SopfRe set_union(const SopfRe& a, const SopfRe& b, OpCounters* ctr) {
    auto x = a.terms();
    auto y = b.terms();
    std::vector<ProductTerm> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        int c = canonical_compare(x[i], y[j], ctr);
        if (c < 0) {
            out.push_back(x[i++]);
        } else if (c > 0) {
            out.push_back(y[j++]);
        } else {
            out.push_back(x[i++]);
            ++j;
        }
        count_copy(ctr);
    }
    for (; i < x.size(); ++i, count_copy(ctr)) out.push_back(x[i]);
    for (; j < y.size(); ++j, count_copy(ctr)) out.push_back(y[j]);
    return SopfRe::from_sorted(std::move(out));
}

SopfRe set_difference(const SopfRe& r, const SopfRe& c, OpCounters* ctr) {
    auto x = r.terms();
    auto y = c.terms();
    std::vector<ProductTerm> out;
    out.reserve(x.size());
    std::size_t i = 0, j = 0;
    while (i < x.size()) {
        int cmp = j < y.size() ? canonical_compare(x[i], y[j], ctr) : -1;
        if (cmp < 0) {
            out.push_back(x[i++]);
            count_copy(ctr);
        } else if (cmp > 0) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return SopfRe::from_sorted(std::move(out));
}

SopfRe set_concat(const SopfRe& a, const SopfRe& b, OpCounters* ctr) {
    if (a.empty() || b.empty()) return {};

    // Runs of equal-length terms; canonical order makes them contiguous.
    auto runs = [](std::span<const ProductTerm> terms) {
        std::vector<std::span<const ProductTerm>> out;
        std::size_t begin = 0;
        for (std::size_t i = 1; i <= terms.size(); ++i) {
            if (i == terms.size() || terms[i].size() != terms[begin].size()) {
                out.push_back(terms.subspan(begin, i - begin));
                begin = i;
            }
        }
        return out;
    };

    // Products of one head run with one tail run come out sorted when the
    // head varies slowest. Blocks of equal total length are k-way merged, so
    // the only ordering work beyond the copies is logarithmic in the number
    // of blocks, never in the number of terms.
    struct Block {
        std::span<const ProductTerm> heads, tails;
        std::size_t i = 0, j = 0;
        std::optional<ProductTerm> current;
    };
    auto advance = [ctr](Block& blk) {
        if (blk.i == blk.heads.size()) {
            blk.current.reset();
            return;
        }
        const ProductTerm& x = blk.heads[blk.i];
        const ProductTerm& y = blk.tails[blk.j];
        std::vector<Symbol> joined;
        joined.reserve(x.size() + y.size());
        joined.insert(joined.end(), x.symbols().begin(), x.symbols().end());
        joined.insert(joined.end(), y.symbols().begin(), y.symbols().end());
        blk.current.emplace(std::move(joined));
        count_copy(ctr);
        if (++blk.j == blk.tails.size()) {
            blk.j = 0;
            ++blk.i;
        }
    };

    std::map<std::size_t, std::vector<Block>> by_length;
    for (auto ra : runs(a.terms()))
        for (auto rb : runs(b.terms())) by_length[ra.front().size() + rb.front().size()].push_back(Block{ra, rb});

    std::vector<ProductTerm> out;
    for (auto& [length, blocks] : by_length) {
        for (auto& blk : blocks) advance(blk);
        auto later = [ctr, &blocks](std::size_t x, std::size_t y) {
            return canonical_compare(*blocks[y].current, *blocks[x].current, ctr) < 0;
        };
        std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> heap(later);
        for (std::size_t k = 0; k < blocks.size(); ++k) heap.push(k);
        while (!heap.empty()) {
            std::size_t k = heap.top();
            heap.pop();
            Block& blk = blocks[k];
            // equal products from different split points meet here
            if (out.empty() || out.back().size() != length || canonical_compare(out.back(), *blk.current, ctr) != 0)
                out.push_back(std::move(*blk.current));
            advance(blk);
            if (blk.current) heap.push(k);
        }
    }
    return SopfRe::from_sorted(std::move(out));
}

SopfRe add_term(const SopfRe& r, const ProductTerm& t, OpCounters* ctr) {
    if (r.contains(t, ctr)) return r;
    std::vector<ProductTerm> out(r.terms().begin(), r.terms().end());
    auto it = std::lower_bound(out.begin(), out.end(), t,
                               [ctr](const ProductTerm& a, const ProductTerm& b) { return canonical_compare(a, b, ctr) < 0; });
    out.insert(it, t);
    count_copy(ctr, out.size());
    return SopfRe::from_sorted(std::move(out));
}

SopfRe remove_term(const SopfRe& r, const ProductTerm& t, OpCounters* ctr) {
    if (!r.contains(t, ctr)) return r;
    std::vector<ProductTerm> out;
    out.reserve(r.size());
    for (const auto& x : r.terms()) {
        if (x == t) continue;
        out.push_back(x);
    }
    count_copy(ctr, out.size());
    return SopfRe::from_sorted(std::move(out));
}

std::string print_term(const ProductTerm& t, bool dotted) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (dotted && i) out += '.';
        out += t[i].str();
    }
    if (dotted && t.size() == 1 && t[0].size() > 1) out += '.';
    return out;
}

std::string print_sopf(const SopfRe& r, TermStyle style) {
    if (r.empty()) return "EMPTY";
    bool dotted = style == TermStyle::dotted;
    if (!dotted) {
        for (const auto& t : r.terms())
            for (const auto& s : t.symbols())
                if (s.size() != 1) dotted = true;
    }
    std::string out;
    for (const auto& t : r.terms()) {
        if (!out.empty()) out += " + ";
        out += print_term(t, dotted);
    }
    return out;
}

SopfRe parse_sopf(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty regular expression");
    if (text == "EMPTY") return {};
    std::vector<ProductTerm> terms;
    std::size_t start = 0;
    while (true) {
        std::size_t plus = text.find('+', start);
        std::string_view piece = trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
        terms.push_back(parse_term(piece));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return SopfRe(std::move(terms));
}

} // namespace dgre
