#include <doctest.h>

#include "tilespace/error.hpp"
#include "tilespace/hull.hpp"
#include "tilespace/symbolic1d.hpp"

using namespace tilespace;

namespace {

std::vector<std::string> names_of(const SymbolicSubstitution& s) {
    auto letters = collared_letters(s);
    CollaredNames names(letters);
    std::vector<std::string> out;
    for (const auto& x : letters)
        out.push_back(names(x));
    return out;
}

// Window semantics written out directly: sigma^k(core) must sit at least two
// letters from each end of sigma^k(left core right).
bool window_forces(const SymbolicSubstitution& s, const std::string& w3, int k) {
    std::string l = s.apply(w3.substr(0, 1), k), c = s.apply(w3.substr(1, 1), k), r = s.apply(w3.substr(2, 1), k);
    return l.size() >= 2 && r.size() >= 2;
}

}  // namespace

TEST_CASE("Fibonacci language") {
    auto s = fibonacci();
    CHECK(s.apply("a", 5) == "bababbab");
    CHECK(s.apply("a", 7) == "bababbababbabbababbab");
    CHECK(legal_words(s, 2) == std::set<std::string>{"ab", "ba", "bb"});
    CHECK(legal_words(s, 3) == std::set<std::string>{"aba", "abb", "bab", "bba"});
    CHECK(is_primitive(s));
}

TEST_CASE("Fibonacci collared letters and their names") {
    auto s = fibonacci();
    auto letters = collared_letters(s);
    REQUIRE(letters.size() == 4);
    CHECK(names_of(s) == std::vector<std::string>{"a₁", "b₁", "b₂", "b₃"});
    CHECK(letters[0] == CollaredLetter{'b', 'a', 'b'});
    CHECK(letters[1] == CollaredLetter{'a', 'b', 'b'});
    CHECK(letters[2] == CollaredLetter{'b', 'b', 'a'});
    CHECK(letters[3] == CollaredLetter{'a', 'b', 'a'});
}

TEST_CASE("Fibonacci second-level images") {
    auto s = fibonacci();
    CollaredNames names(collared_letters(s));
    std::vector<std::string> shown;
    for (const auto& img : collared_substitution(s, 2))
        shown.push_back(format_image(img, names, 2));
    CHECK(shown == std::vector<std::string>{
                       "σ²(a₁)=(b₃)a₁b₁(b₂)",
                       "σ²(b₁)=(b₁)b₂a₁b₁(b₂)",
                       "σ²(b₂)=(b₁)b₂a₁b₃(a₁)",
                       "σ²(b₃)=(b₁)b₂a₁b₃(a₁)",
                   });
}

TEST_CASE("Fibonacci forces its border at k = 2, not 1") {
    auto s = fibonacci();
    CHECK(border_forcing_k(s, 8) == 2);
    auto k1 = collared_substitution(s, 1);
    CHECK_FALSE(std::all_of(k1.begin(), k1.end(), [](const CollaredImage& i) { return i.forced(); }));
    CollaredNames names(collared_letters(s));
    CHECK(format_image(k1[0], names, 1) == "σ¹(a₁)=(b₁)b₂(a₁)");
    CHECK(format_image(k1[1], names, 1) == "σ¹(b₁)=(?)a₁b₃(a₁)");
}

TEST_CASE("forcing k agrees with the direct window rule") {
    for (auto s : {fibonacci(), SymbolicSubstitution{"ab", {{'a', "ab"}, {'b', "ba"}}},
                   SymbolicSubstitution{"ab", {{'a', "aab"}, {'b', "b"}}}}) {
        std::optional<int> expected;
        for (int k = 1; k <= 8 && !expected; ++k) {
            bool all = true;
            for (const auto& w : legal_words(s, 3))
                all = all && window_forces(s, w, k);
            if (all)
                expected = k;
        }
        CHECK(border_forcing_k(s, 8) == expected);
    }
}

TEST_CASE("a -> aa forces at once") {
    SymbolicSubstitution s{"a", {{'a', "aa"}}};
    CHECK(collared_letters(s).size() == 1);
    CHECK(border_forcing_k(s, 4) == 1);
}

TEST_CASE("Thue-Morse") {
    SymbolicSubstitution tm{"ab", {{'a', "ab"}, {'b', "ba"}}};
    auto k = border_forcing_k(tm, 8);
    REQUIRE(k);
    CHECK(*k <= 8);
    CHECK(collared_letters(tm).size() == 6);
}

TEST_CASE("images compose") {
    auto s = fibonacci();
    auto letters = collared_letters(s);
    CollaredNames names(letters);
    auto once = collared_substitution(s, 1);
    auto twice = collared_substitution(s, 2);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        std::vector<CollaredLetter> composed;
        for (const auto& x : once[i].core) {
            const auto& inner = once[names.index(x)].core;
            composed.insert(composed.end(), inner.begin(), inner.end());
        }
        CHECK(composed == twice[i].core);
    }
}

TEST_CASE("Fibonacci Anderson-Putnam graph") {
    auto g = ap_graph_1d(fibonacci());
    CHECK(g.complex.cells == std::vector<std::size_t>{3, 4});
    CHECK(g.complex.euler_characteristic() == -1);
    CHECK(g.maps.maps[1] == IntegerMatrix{{0, 0, 1, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}});
    auto h = limit_cohomology(g.complex, g.maps);
    CHECK(h.passed());
    CHECK(h.degrees[1].limit.rational_dim == 2);
}

TEST_CASE("Fibonacci H1 dimension from explicit matrix powers") {
    // The graph by hand: vertices P = a₁.right ~ b₁.left ~ b₃.left,
    // Q = b₃.right ~ b₂.right ~ a₁.left, R = b₁.right ~ b₂.left.
    // Edges a₁: Q->P, b₁: P->R, b₂: R->Q, b₃: P->Q.
    IntegerMatrix boundary{{1, -1, 0, -1}, {-1, 0, 1, 1}, {0, 1, -1, 0}};
    IntegerMatrix s1{{0, 0, 1, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}};
    IntegerMatrix coboundaries = boundary.transpose();
    const std::size_t cob = rank(coboundaries);
    CHECK(cob == 2);
    CHECK(4 - cob == 2);
    // Rank of S^n on cochains modulo coboundaries, n = 1..6.
    IntegerMatrix p = IntegerMatrix::identity(4);
    for (int n = 1; n <= 6; ++n) {
        p = s1 * p;
        IntegerMatrix joined(4, 4 + coboundaries.cols());
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j)
                joined(i, j) = p(i, j);
            for (std::size_t j = 0; j < coboundaries.cols(); ++j)
                joined(i, 4 + j) = coboundaries(i, j);
        }
        CHECK(rank(joined) - cob == 2);
    }
    // Same graph up to vertex relabelling.
    auto g = ap_graph_1d(fibonacci());
    auto groups = cohomology(g.complex);
    CHECK(groups[1].rank == 2);
}

TEST_CASE("rules files") {
    auto s = parse_substitution("# Fibonacci\na -> b\nb -> ab  # second\n\n");
    CHECK(s.alphabet == "ab");
    CHECK(s.rules == fibonacci().rules);

    auto error_of = [](const std::string& text) -> std::string {
        try {
            parse_substitution(text, "r.txt");
        } catch (const Error& e) {
            return e.what();
        }
        return "";
    };
    CHECK(error_of("a -> b\nb ab\n") == "r.txt:2:1: expected 'symbol -> word'");
    CHECK(error_of("ab -> a\n") == "r.txt:1:1: left side must be a single symbol");
    CHECK(error_of("a -> \n") == "r.txt:1:5: empty image");
    CHECK(error_of("a -> b\na -> a\nb -> a\n") == "r.txt:2:1: second rule for 'a'");
    CHECK(error_of("a -> ac\n") == "image of 'a' uses 'c', not in the alphabet");
    CHECK(error_of("") == "empty alphabet");
}

TEST_CASE("non-primitive and non-growing substitutions") {
    SymbolicSubstitution s{"ab", {{'a', "a"}, {'b', "ab"}}};
    CHECK_FALSE(is_primitive(s));
    SymbolicSubstitution flat{"ab", {{'a', "b"}, {'b', "a"}}};
    CHECK_THROWS_AS(legal_words(flat, 3), SubstitutionError);
}
