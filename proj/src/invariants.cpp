#include "lpaflow/invariants.hpp"

namespace lpaflow {

namespace {

nlohmann::ordered_json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

}  // namespace

IntMatrix franks_matrix(const MultiGraph& g) {
    const IntMatrix a = incidence_matrix(g);
    IntMatrix m = IntMatrix::identity(g.vertex_count());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(j, i) -= a(i, j);
    }
    return m;
}

FranksTriple franks_triple(const MultiGraph& g) {
    const IntMatrix m = franks_matrix(g);
    const Cokernel c = cokernel(m);
    const IntVector ones(g.vertex_count(), Integer(1));
    return {PointedGroup(c.group, c.projection(ones)), det(m)};
}

bool equiv_det_pair(const FranksTriple& a, const FranksTriple& b) {
    return group_iso(a.pointed.group(), b.pointed.group()) && a.determinant == b.determinant;
}

Decision equiv_unitary_pair(const FranksTriple& a, const FranksTriple& b, const PointedOptions& options) {
    return pointed_equivalent(a.pointed, b.pointed, options);
}

Decision equiv_triple(const FranksTriple& a, const FranksTriple& b, const PointedOptions& options) {
    if (a.determinant != b.determinant) return Decision::No;
    return equiv_unitary_pair(a, b, options);
}

nlohmann::ordered_json to_json(const FranksTriple& t, bool purely_infinite_simple) {
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const auto& d : t.pointed.group().torsion()) torsion.push_back(integer_json(d));
    nlohmann::ordered_json unit = nlohmann::ordered_json::array();
    for (const auto& x : t.pointed.point()) unit.push_back(integer_json(x));
    return {{"schema", 1},
            {"group", {{"torsion", torsion}, {"free_rank", t.pointed.group().free_rank()}}},
            {"unit", unit},
            {"det", integer_json(t.determinant)},
            {"pis", purely_infinite_simple}};
}

}  // namespace lpaflow
