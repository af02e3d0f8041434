#ifndef DGRE_TESTS_FIXTURES_HPP
#define DGRE_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "dgre/graph.hpp"
#include "dgre/sopf.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(DGRE_TEST_DATA) + "/" + name; }

inline std::string read(const std::string& name) {
    std::ifstream in(data_path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline dgre::Dg fig1() { return dgre::parse_graph(read("fig1.dg")); }

// The nine product terms of the sample model.
inline dgre::SopfRe example1() {
    return dgre::SopfRe::compact({"abdghilmpq", "abdghjklmpq", "abdghjknopq", "acdghilmpq", "acdghjklmpq",
                                  "acdghjknopq", "acefghilmpq", "acefghjklmpq", "acefghjknopq"});
}

// Result of (cd)o_a (df)i_a (n)o_n on the sample model, traced by hand.
inline dgre::SopfRe fig2_expected() {
    return dgre::SopfRe::compact(
        {"abdghilmpq", "abdghjklmpq", "abdfghilmpq", "abdfghjklmpq", "acefghilmpq", "acefghjklmpq", "opq"});
}

inline dgre::Symbol sym(const char* s) { return dgre::Symbol(s); }

} // namespace fixtures

#endif
