#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tilespace/cohomology.hpp"
#include "tilespace/complex.hpp"

namespace tilespace {

/** Letters are single characters; `alphabet` keeps the order rules were given in. */
struct SymbolicSubstitution {
    std::string alphabet;
    std::map<char, std::string> rules;

    std::string apply(std::string_view word, int times = 1) const;
};

/** Checks that every letter has a nonempty image over the alphabet; throws SubstitutionError. */
void check_substitution(const SymbolicSubstitution& s);

SymbolicSubstitution fibonacci();

/** Lines of the form `a -> ab`; '#' starts a comment. Throws ParseError. */
SymbolicSubstitution parse_substitution(std::string_view text, const std::string& source = "rules");

/** Some power of the letter-count matrix is positive. */
bool is_primitive(const SymbolicSubstitution& s);

/**
 * Length-n factors of the words sigma^k(letter), found by closing the set of
 * short factors under the substitution. Throws SubstitutionError when no
 * image ever reaches length n.
 */
std::set<std::string> legal_words(const SymbolicSubstitution& s, std::size_t n);

/** (left)core(right). */
struct CollaredLetter {
    char left = 0;
    char core = 0;
    char right = 0;
    friend auto operator<=>(const CollaredLetter&, const CollaredLetter&) = default;
};

/**
 * Collared letters in naming order: first appearance inside sigma^k(letter)
 * for k = 1, 2, ..., letters in alphabet order, left to right. The i-th
 * letter with a given core is named core + subscript i.
 */
std::vector<CollaredLetter> collared_letters(const SymbolicSubstitution& s);

/** Name lookup, e.g. "a₁". */
class CollaredNames {
public:
    explicit CollaredNames(const std::vector<CollaredLetter>& letters);
    const std::string& operator()(const CollaredLetter& c) const;
    std::size_t index(const CollaredLetter& c) const;

private:
    std::map<CollaredLetter, std::string> names_;
    std::map<CollaredLetter, std::size_t> index_;
};

/**
 * sigma^k of a collared letter, read inside sigma^k(left) sigma^k(core)
 * sigma^k(right). A flank is known only when its own collar lies inside
 * that window.
 */
struct CollaredImage {
    CollaredLetter source;
    std::optional<CollaredLetter> left_flank;
    std::vector<CollaredLetter> core;
    std::optional<CollaredLetter> right_flank;

    bool forced() const { return left_flank && right_flank; }
};

std::vector<CollaredImage> collared_substitution(const SymbolicSubstitution& s, int k);

/** e.g. "σ²(a₁)=(b₃)a₁b₁(b₂)"; an unknown flank prints as (?). */
std::string format_image(const CollaredImage& img, const CollaredNames& names, int k);

/** Smallest k in 1..kmax at which every collared image has both flanks known. */
std::optional<int> border_forcing_k(const SymbolicSubstitution& s, int kmax);

/**
 * One-dimensional Anderson-Putnam complex: collared letters are 1-cells,
 * vertices are the classes of endpoints glued along legal adjacencies.
 */
struct APGraph1D {
    std::vector<CollaredLetter> letters;
    CWComplex complex;
    ChainMaps maps;
};

/** Throws SubstitutionError if the induced vertex map is not well defined. */
APGraph1D ap_graph_1d(const SymbolicSubstitution& s);

}  // namespace tilespace
