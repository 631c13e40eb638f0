#include "tilespace/symbolic1d.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tilespace/error.hpp"

namespace tilespace {

std::string SymbolicSubstitution::apply(std::string_view word, int times) const {
    std::string w(word);
    for (int i = 0; i < times; ++i) {
        std::string next;
        for (char c : w)
            next += rules.at(c);
        w = std::move(next);
    }
    return w;
}

void check_substitution(const SymbolicSubstitution& s) {
    if (s.alphabet.empty())
        throw SubstitutionError("empty alphabet");
    for (char c : s.alphabet) {
        auto it = s.rules.find(c);
        if (it == s.rules.end() || it->second.empty())
            throw SubstitutionError(std::string("letter '") + c + "' has no image");
        for (char x : it->second)
            if (s.alphabet.find(x) == std::string::npos)
                throw SubstitutionError(std::string("image of '") + c + "' uses '" + x + "', not in the alphabet");
    }
}

SymbolicSubstitution fibonacci() { return {"ab", {{'a', "b"}, {'b', "ab"}}}; }

SymbolicSubstitution parse_substitution(std::string_view text, const std::string& source) {
    SymbolicSubstitution s;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string compact;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                compact += c;
        if (compact.empty())
            continue;
        auto arrow = compact.find("->");
        if (arrow == std::string::npos)
            throw ParseError(source, line_no, 1, "expected 'symbol -> word'");
        if (arrow != 1)
            throw ParseError(source, line_no, 1, "left side must be a single symbol");
        char sym = compact[0];
        std::string image = compact.substr(arrow + 2);
        if (image.empty())
            throw ParseError(source, line_no, line.find("->") + 3, "empty image");
        if (s.rules.count(sym))
            throw ParseError(source, line_no, 1, std::string("second rule for '") + sym + "'");
        s.alphabet += sym;
        s.rules[sym] = image;
    }
    check_substitution(s);
    return s;
}

bool is_primitive(const SymbolicSubstitution& s) {
    const std::size_t n = s.alphabet.size();
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (char c : s.rules.at(s.alphabet[i]))
            m(i, s.alphabet.find(c)) += 1;
    IntegerMatrix p = m;
    // Wielandt: a primitive n x n matrix has a positive power at (n-1)^2 + 1.
    for (std::size_t k = 1; k <= (n - 1) * (n - 1) + 1; ++k) {
        bool positive = true;
        for (std::size_t i = 0; i < n && positive; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p(i, j) == 0) {
                    positive = false;
                    break;
                }
        if (positive)
            return true;
        // Only the zero pattern matters; keep entries small.
        p = p * m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p(i, j) != 0)
                    p(i, j) = 1;
    }
    return false;
}

std::set<std::string> legal_words(const SymbolicSubstitution& s, std::size_t n) {
    check_substitution(s);
    // Every length-n factor of sigma(v) lies in sigma(u) for a factor u of v
    // with |u| <= n, so short factors closed under sigma are the language.
    std::set<std::string> known;
    std::vector<std::string> frontier;
    for (char c : s.alphabet)
        if (known.insert(std::string(1, c)).second)
            frontier.emplace_back(1, c);
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& u : frontier) {
            std::string img = s.apply(u);
            for (std::size_t len = 1; len <= n; ++len)
                for (std::size_t i = 0; i + len <= img.size(); ++i) {
                    std::string f = img.substr(i, len);
                    if (known.insert(f).second)
                        next.push_back(f);
                }
        }
        frontier = std::move(next);
    }
    std::set<std::string> out;
    for (const auto& w : known)
        if (w.size() == n)
            out.insert(w);
    if (out.empty())
        throw SubstitutionError("no word of length " + std::to_string(n) + " ever occurs; substitution does not grow");
    return out;
}

std::vector<CollaredLetter> collared_letters(const SymbolicSubstitution& s) {
    std::set<CollaredLetter> legal;
    for (const auto& w : legal_words(s, 3))
        legal.insert({w[0], w[1], w[2]});

    std::vector<CollaredLetter> ordered;
    std::set<CollaredLetter> found;
    constexpr std::size_t kScanLimit = 1 << 20;
    for (int k = 1; found.size() < legal.size(); ++k) {
        bool grew = false;
        for (char c : s.alphabet) {
            std::string w = s.apply(std::string(1, c), k);
            if (w.size() > kScanLimit)
                continue;
            grew = true;
            for (std::size_t i = 1; i + 1 < w.size(); ++i) {
                CollaredLetter x{w[i - 1], w[i], w[i + 1]};
                if (found.insert(x).second)
                    ordered.push_back(x);
            }
        }
        if (!grew || k > 64)
            break;
    }
    for (const auto& x : legal)
        if (!found.count(x))
            ordered.push_back(x);
    return ordered;
}

namespace {

std::string subscript(std::size_t n) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (char c : std::to_string(n))
        s += digits[c - '0'];
    return s;
}

std::string superscript(int n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (char c : std::to_string(n))
        s += digits[c - '0'];
    return s;
}

}  // namespace

CollaredNames::CollaredNames(const std::vector<CollaredLetter>& letters) {
    std::map<char, std::size_t> per_core;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        names_[letters[i]] = std::string(1, letters[i].core) + subscript(++per_core[letters[i].core]);
        index_[letters[i]] = i;
    }
}

const std::string& CollaredNames::operator()(const CollaredLetter& c) const { return names_.at(c); }

std::size_t CollaredNames::index(const CollaredLetter& c) const { return index_.at(c); }

std::vector<CollaredImage> collared_substitution(const SymbolicSubstitution& s, int k) {
    std::vector<CollaredImage> out;
    for (const auto& x : collared_letters(s)) {
        CollaredImage img;
        img.source = x;
        if (k == 0) {
            img.core = {x};
            out.push_back(img);
            continue;
        }
        std::string l = s.apply(std::string(1, x.left), k);
        std::string c = s.apply(std::string(1, x.core), k);
        std::string r = s.apply(std::string(1, x.right), k);
        std::string window = l + c + r;
        std::size_t begin = l.size(), end = l.size() + c.size();
        auto at = [&](std::size_t i) { return CollaredLetter{window[i - 1], window[i], window[i + 1]}; };
        for (std::size_t i = begin; i < end; ++i)
            img.core.push_back(at(i));
        if (begin >= 2)
            img.left_flank = at(begin - 1);
        if (end + 1 < window.size())
            img.right_flank = at(end);
        out.push_back(img);
    }
    return out;
}

std::string format_image(const CollaredImage& img, const CollaredNames& names, int k) {
    std::string s = "σ" + superscript(k) + "(" + names(img.source) + ")=";
    s += "(" + (img.left_flank ? names(*img.left_flank) : std::string("?")) + ")";
    for (const auto& x : img.core)
        s += names(x);
    s += "(" + (img.right_flank ? names(*img.right_flank) : std::string("?")) + ")";
    return s;
}

std::optional<int> border_forcing_k(const SymbolicSubstitution& s, int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        auto images = collared_substitution(s, k);
        if (std::all_of(images.begin(), images.end(), [](const CollaredImage& i) { return i.forced(); }))
            return k;
    }
    return std::nullopt;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

APGraph1D ap_graph_1d(const SymbolicSubstitution& s) {
    APGraph1D g;
    g.letters = collared_letters(s);
    CollaredNames names(g.letters);
    const std::size_t n = g.letters.size();

    // Endpoint 2i is the left end of letter i, 2i+1 its right end.
    std::vector<std::size_t> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& w : legal_words(s, 4)) {
        std::size_t x = names.index({w[0], w[1], w[2]});
        std::size_t y = names.index({w[1], w[2], w[3]});
        parent[find_root(parent, 2 * x + 1)] = find_root(parent, 2 * y);
    }
    std::map<std::size_t, std::size_t> vertex_of_root;
    std::vector<std::size_t> vertex(2 * n);
    for (std::size_t e = 0; e < 2 * n; ++e) {
        auto root = find_root(parent, e);
        auto it = vertex_of_root.emplace(root, vertex_of_root.size()).first;
        vertex[e] = it->second;
    }
    const std::size_t nv = vertex_of_root.size();

    CWComplex& c = g.complex;
    c.cells = {nv, n};
    IntegerMatrix b1(nv, n);
    for (std::size_t i = 0; i < n; ++i) {
        c.edge_ends.emplace_back(vertex[2 * i], vertex[2 * i + 1]);
        if (vertex[2 * i] != vertex[2 * i + 1]) {
            b1(vertex[2 * i + 1], i) += 1;
            b1(vertex[2 * i], i) -= 1;
        }
    }
    c.boundary = {b1};
    c.labels = {std::vector<std::string>(nv), {}};
    for (std::size_t v = 0; v < nv; ++v)
        c.labels[0][v] = "p" + std::to_string(v + 1);
    for (const auto& x : g.letters)
        c.labels[1].push_back(names(x));

    IntegerMatrix s1(n, n), s0(nv, nv);
    std::vector<bool> seen(nv, false);
    auto map_vertex = [&](std::size_t from, std::size_t to) {
        if (seen[from] && s0(from, to) != 1)
            throw SubstitutionError("vertex p" + std::to_string(from + 1) + " has no well-defined image");
        if (!seen[from]) {
            s0(from, to) = 1;
            seen[from] = true;
        }
    };
    for (const auto& img : collared_substitution(s, 1)) {
        std::size_t i = names.index(img.source);
        for (const auto& x : img.core)
            s1(i, names.index(x)) += 1;
        map_vertex(vertex[2 * i], vertex[2 * names.index(img.core.front())]);
        map_vertex(vertex[2 * i + 1], vertex[2 * names.index(img.core.back()) + 1]);
    }
    g.maps.maps = {s0, s1};
    if (auto failure = commutation_failure(c, g.maps))
        throw SubstitutionError(*failure);
    return g;
}

}  // namespace tilespace
