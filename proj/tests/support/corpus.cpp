#include "support/corpus.hpp"

namespace cering::tests {

AlgebraPtr matrix_algebra(const FieldSpec& f, size_t m) {
    // basis E_{rc} at index r*m + c; E_{ab} E_{cd} = delta_{bc} E_{ad}
    std::vector<std::string> labels;
    for (size_t r = 0; r < m; r++)
        for (size_t c = 0; c < m; c++)
            labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    std::vector<TableEntry> table;
    Scalar one = Scalar::one(f);
    for (size_t a = 0; a < m; a++)
        for (size_t b = 0; b < m; b++)
            for (size_t d = 0; d < m; d++)
                table.push_back({a * m + b, b * m + d, a * m + d, one});
    Vec unit = zero_vec(f, m * m);
    for (size_t a = 0; a < m; a++) unit[a * m + a] = one;
    return make_algebra(f, std::move(labels), table, std::move(unit),
                        "matrix:" + f.name() + ":" + std::to_string(m));
}

AlgebraPtr cyclic_group_algebra(const FieldSpec& f, size_t m) {
    return group_algebra(f, cyclic_group(m), "group:" + f.name() + ":c" + std::to_string(m));
}

std::vector<CorpusMember> reference_corpus() {
    std::vector<CorpusMember> out;
    for (int64_t p : {2, 3}) {
        FieldSpec f = FieldSpec::prime(p);
        for (size_t n : {2, 3, 4})
            out.push_back({"exterior:gf" + std::to_string(p) + ":" + std::to_string(n),
                           exterior_algebra(f, n)});
    }
    out.push_back({"group:gf2:q8", group_algebra(FieldSpec::prime(2), quaternion_group(),
                                                 "group:gf2:q8")});
    out.push_back({"group:gf3:c2", cyclic_group_algebra(FieldSpec::prime(3), 2)});
    out.push_back({"group:gf2:c4", cyclic_group_algebra(FieldSpec::prime(2), 4)});
    out.push_back({"matrix:gf2:2", matrix_algebra(FieldSpec::prime(2), 2)});
    return out;
}

}  // namespace cering::tests
