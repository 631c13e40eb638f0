#include "tilespace/cohomology.hpp"

#include "tilespace/error.hpp"

namespace tilespace {

std::string to_string(const AbelianGroup& g) {
    std::vector<std::string> parts;
    if (g.rank == 1)
        parts.push_back("Z");
    else if (g.rank > 1)
        parts.push_back("Z^" + std::to_string(g.rank));
    for (std::size_t i = 0; i < g.torsion.size();) {
        std::size_t j = i;
        while (j < g.torsion.size() && g.torsion[j] == g.torsion[i])
            ++j;
        std::string cyclic = "Z/" + g.torsion[i].str();
        parts.push_back(j - i == 1 ? cyclic : "(" + cyclic + ")^" + std::to_string(j - i));
        i = j;
    }
    if (parts.empty())
        return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        s += " + " + parts[i];
    return s;
}

namespace {

Integer mod_nonneg(const Integer& x, const Integer& m) {
    Integer r = x % m;
    return r < 0 ? Integer(r + m) : r;
}

IntegerMatrix reduce_rows(IntegerMatrix m, const std::vector<Integer>& orders) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (i < orders.size() && orders[i] != 0)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = mod_nonneg(m(i, j), orders[i]);
    return m;
}

Integer group_order(const AbelianGroup& g) {
    Integer n = 1;
    for (const auto& t : g.torsion)
        n *= t;
    return n;
}

}  // namespace

std::vector<CohomologyGroup> cohomology_groups(const CWComplex& c) {
    std::vector<CohomologyGroup> out;
    for (int d = 0; d <= c.dimension(); ++d) {
        const std::size_t n = c.count(d);
        IntegerMatrix kernel, to_kernel;
        if (d < static_cast<int>(c.boundary.size())) {
            SNFResult s = smith_normal_form(c.boundary[static_cast<std::size_t>(d)].transpose());
            kernel = s.V.block(0, s.rank, n, n - s.rank);
            to_kernel = s.V_inv.block(s.rank, 0, n - s.rank, n);
        } else {
            kernel = to_kernel = IntegerMatrix::identity(n);
        }
        const std::size_t k = kernel.cols();
        IntegerMatrix image = d > 0 ? c.boundary[static_cast<std::size_t>(d - 1)].transpose() : IntegerMatrix(n, 0);
        IntegerMatrix image_coords = to_kernel * image;
        if (!(kernel * image_coords == image))
            throw DerivationError("coboundaries are not cocycles in degree " + std::to_string(d));

        SNFResult s = smith_normal_form(image_coords);
        IntegerMatrix coords_all = s.U * to_kernel;
        IntegerMatrix gens_all = kernel * s.U_inv;

        std::vector<std::size_t> keep;
        std::vector<Integer> orders;
        for (std::size_t i = 0; i < s.rank; ++i)
            if (s.D(i, i) != 1) {
                keep.push_back(i);
                orders.push_back(s.D(i, i));
            }
        CohomologyGroup h;
        h.degree = d;
        h.group.torsion = orders;
        h.group.rank = k - s.rank;
        for (std::size_t i = s.rank; i < k; ++i) {
            keep.push_back(i);
            orders.push_back(0);
        }
        h.orders = orders;
        h.generators = gens_all.select_columns(keep);
        h.coordinates = coords_all.transpose().select_columns(keep).transpose();
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<AbelianGroup> cohomology(const CWComplex& c) {
    std::vector<AbelianGroup> out;
    for (const auto& h : cohomology_groups(c))
        out.push_back(h.group);
    return out;
}

std::vector<InducedMap> induced_endomorphisms(const CWComplex& c, const std::vector<CohomologyGroup>& groups,
                                              const ChainMaps& m) {
    if (auto failure = commutation_failure(c, m))
        throw DerivationError("induced map ill-defined: " + *failure);
    std::vector<InducedMap> out;
    for (const auto& h : groups) {
        const auto d = static_cast<std::size_t>(h.degree);
        IntegerMatrix images = m.maps[d] * h.generators;
        if (d < c.boundary.size() && !(c.boundary[d].transpose() * images).is_zero())
            throw DerivationError("image of a cocycle is not a cocycle in degree " + std::to_string(d));
        IntegerMatrix coords = reduce_rows(h.coordinates * images, h.orders);
        const std::size_t tc = h.torsion_count(), g = h.orders.size();
        for (std::size_t j = 0; j < tc; ++j)
            for (std::size_t i = tc; i < g; ++i)
                if (coords(i, j) != 0)
                    throw DerivationError("torsion class maps to a free class in degree " + std::to_string(d));
        InducedMap f;
        f.degree = h.degree;
        f.matrix = coords;
        f.free_part = coords.block(tc, tc, g - tc, g - tc);
        f.torsion_part = coords.block(0, 0, tc, tc);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<InducedMap> induced_endomorphisms(const CWComplex& c, const ChainMaps& m) {
    return induced_endomorphisms(c, cohomology_groups(c), m);
}

AbelianGroup generated_subgroup(const std::vector<Integer>& orders, const IntegerMatrix& gens) {
    const std::size_t t = orders.size();
    if (t == 0)
        return {};
    IntegerMatrix lattice(t, gens.cols() + t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < gens.cols(); ++j)
            lattice(i, j) = gens(i, j);
        lattice(i, gens.cols() + i) = orders[i];
    }
    // Basis of the lattice is U^{-1} diag(lambda); express diag(orders) in it.
    SNFResult s = smith_normal_form(lattice);
    IntegerMatrix rel(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            rel(i, j) = s.U(i, j) * orders[j] / s.D(i, i);
    AbelianGroup g;
    for (const auto& f : smith_normal_form(rel).invariant_factors())
        if (f != 1)
            g.torsion.push_back(f);
    return g;
}

AbelianGroup finite_eventual_image(const std::vector<Integer>& orders, const IntegerMatrix& map) {
    if (orders.empty())
        return {};
    IntegerMatrix t = reduce_rows(map, orders);
    IntegerMatrix p = t;
    AbelianGroup current = generated_subgroup(orders, p);
    while (true) {
        p = reduce_rows(t * p, orders);
        AbelianGroup next = generated_subgroup(orders, p);
        // Images are nested, so equal orders mean the chain has stopped.
        if (group_order(next) == group_order(current))
            return next;
        current = next;
    }
}

namespace {

void factor(Integer n, std::vector<Integer>& primes, Integer& rest) {
    if (n < 0)
        n = -n;
    for (Integer p = 2; p <= 1000000 && p * p <= n; ++p)
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    if (n > 1) {
        if (n <= Integer(1000000) * 1000000)
            primes.push_back(n);
        else
            rest = n;
    }
}

}  // namespace

DirectLimitResult direct_limit(const IntegerMatrix& m) {
    if (!m.square())
        throw Error("direct limit needs a square matrix");
    DirectLimitResult r;
    const std::size_t n = m.rows();
    IntegerMatrix p = m;
    SNFResult s = smith_normal_form(p);
    r.rank_sequence.push_back(s.rank);
    r.stabilization_index = 1;
    while (true) {
        IntegerMatrix q = p * m;
        SNFResult sq = smith_normal_form(q);
        r.rank_sequence.push_back(sq.rank);
        if (sq.rank == s.rank)
            break;
        p = std::move(q);
        s = std::move(sq);
        ++r.stabilization_index;
    }
    r.rational_dim = s.rank;
    r.stabilized_invariants = s.invariant_factors();

    const std::size_t e = r.rational_dim;
    IntegerMatrix basis = s.U_inv.block(0, 0, n, e);
    IntegerMatrix image = s.U * (m * basis);
    if (!image.block(e, 0, n - e, e).is_zero())
        throw DerivationError("eventual image is not invariant");
    r.restricted = image.block(0, 0, e, e);
    Integer det = determinant(r.restricted);
    r.eventual_determinant = det < 0 ? Integer(-det) : det;
    r.unimodular = r.eventual_determinant == 1;
    if (!r.unimodular)
        factor(r.eventual_determinant, r.localization_primes, r.unfactored);

    if (e == 0) {
        r.description = "0";
    } else if (r.unimodular) {
        r.description = e == 1 ? "Z" : "Z^" + std::to_string(e);
    } else {
        std::string primes;
        for (std::size_t i = 0; i < r.localization_primes.size(); ++i)
            primes += (i ? "," : "") + r.localization_primes[i].str();
        if (r.unfactored != 1)
            primes += (primes.empty() ? "" : ",") + r.unfactored.str() + "?";
        if (e == 1)
            r.description = "Z[1/" + (r.localization_primes.size() == 1 && r.unfactored == 1
                                          ? r.localization_primes[0].str()
                                          : r.eventual_determinant.str()) +
                            "]";
        else
            r.description = "rank " + std::to_string(e) + ", not finitely generated; denominators at {" + primes + "}";
    }
    return r;
}

DirectLimitResult direct_limit(const CohomologyGroup& h, const InducedMap& f) {
    DirectLimitResult r = direct_limit(f.free_part);
    std::vector<Integer> torsion_orders(h.orders.begin(), h.orders.begin() + static_cast<long>(h.torsion_count()));
    r.torsion_limit = finite_eventual_image(torsion_orders, f.torsion_part);
    return r;
}

}  // namespace tilespace
