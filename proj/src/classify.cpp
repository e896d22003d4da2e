#include "linkhom/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "linkhom/alexander.hpp"
#include "linkhom/errors.hpp"

namespace linkhom {

std::string to_string(LinkKind k) {
    switch (k) {
        case LinkKind::RationalHomologySphere: return "rational_homology_sphere";
        case LinkKind::HomotopySphere: return "homotopy_sphere";
        case LinkKind::ConnectedSumS3xS4: return "connected_sum_s3xs4";
        case LinkKind::Mixed: return "mixed";
    }
    return "?";
}

namespace {

std::string homology_description(const LinkRecord& rec) {
    std::ostringstream os;
    if (sgn(rec.homology.rank) > 0) os << "Z^" << rec.homology.rank.get_str();
    if (rec.torsion_supported) {
        for (const Int& t : rec.homology.torsion) {
            if (os.tellp() > 0) os << " + ";
            os << "Z_" << t.get_str();
        }
        if (os.tellp() == 0) os << "0";
    } else {
        if (os.tellp() > 0) os << " + ";
        os << "torsion of order " << Int(abs(rec.delta_one)).get_str()
           << " (structure unknown: unsupported singularity type)";
    }
    return os.str();
}

}  // namespace

LinkRecord classify_link(const WeightSystem& ws, std::optional<bool> ke_flag) {
    if (ws.var_count() < 3)
        throw DimensionUnsupported("links need m >= 3 variables, got " +
                                   std::to_string(ws.var_count()));
    LinkRecord rec;
    rec.ws = ws;
    rec.ke_flag = ke_flag;
    rec.mu = milnor_number(ws);

    auto decs = find_decompositions(ws);
    rec.decomposition_count = decs.size();
    if (!decs.empty()) {
        rec.decomposition = decs.front();
        rec.torsion_supported = true;
    }

    AlexanderData ad = alexander_data(ws);
    rec.delta_one = ad.delta_one;
    rec.delta_minus_one = ad.delta_minus_one;
    rec.homology.rank = ad.betti;
    OrlikData od = orlik_torsion(uv_data(ws));
    for (const Int& dj : od.d)
        if (dj >= 2) rec.homology.torsion.push_back(dj);

    int dim = ws.link_dim();
    bool rank_zero = sgn(ad.betti) == 0;
    bool delta_one_unit = abs(ad.delta_one) == 1;
    std::ostringstream desc;
    if (rank_zero && !delta_one_unit) {
        rec.kind = LinkKind::RationalHomologySphere;
        desc << "rational homology " << dim << "-sphere, H = " << homology_description(rec);
    } else if (rank_zero && delta_one_unit) {
        if (dim >= 5) {
            rec.kind = LinkKind::HomotopySphere;
            desc << "homotopy " << dim << "-sphere";
        } else {
            // dimension 3: Delta(1) = +-1 only certifies an integral homology
            // sphere (the Poincare sphere realizes it non-trivially)
            rec.kind = LinkKind::Mixed;
            desc << "integral homology 3-sphere";
        }
    } else if (dim == 7 && rec.torsion_supported && rec.homology.torsion.empty()) {
        rec.kind = LinkKind::ConnectedSumS3xS4;
        rec.connected_sum_k = ad.betti;
        desc << "#" << ad.betti.get_str() << "(S^3 x S^4)";
    } else {
        rec.kind = LinkKind::Mixed;
        desc << "H = " << homology_description(rec);
    }
    rec.description = desc.str();
    return rec;
}

std::optional<CoprimeFastPath> coprime_fast_path(const WeightSystem& ws) {
    if (ws.var_count() != 5) return std::nullopt;
    for (std::int64_t wi : ws.weights)
        if (gcd_i64(ws.degree, wi) != 1) return std::nullopt;

    // b3 = -1 + (S4 - S3 d + S2 d^2 - S1 d^3 + d^4) / (w0...w4)
    Int s1 = 0, s2 = 0, s3 = 0, s4 = 0, prod = 1;
    const auto& w = ws.weights;
    for (int i = 0; i < 5; ++i) {
        s1 += w[i];
        for (int j = i + 1; j < 5; ++j) {
            s2 += Int(w[i]) * w[j];
            for (int k = j + 1; k < 5; ++k) {
                s3 += Int(w[i]) * w[j] * w[k];
                for (int l = k + 1; l < 5; ++l) s4 += Int(w[i]) * w[j] * w[k] * w[l];
            }
        }
        prod *= w[i];
    }
    Int d(ws.degree);
    Int num = s4 - s3 * d + s2 * d * d - s1 * d * d * d + d * d * d * d;
    if (num % prod != 0)
        throw NonIntegralMilnor("coprime fast path: symmetric-function sum not integral");
    CoprimeFastPath fp;
    fp.b3 = num / prod - 1;
    fp.torsion = d;
    return fp;
}

std::vector<TwinGroup> find_twins(const std::vector<LinkRecord>& records) {
    auto key_less = [](const TwinKey& a, const TwinKey& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.h3_order < b.h3_order;
    };
    std::map<TwinKey, std::vector<std::size_t>, decltype(key_less)> groups(key_less);
    for (std::size_t i = 0; i < records.size(); ++i) {
        TwinKey key;
        key.d = records[i].ws.degree;
        key.mu = records[i].mu;
        key.h3_order = 1;
        for (const Int& t : records[i].homology.torsion) key.h3_order *= t;
        groups[key].push_back(i);
    }
    std::vector<TwinGroup> out;
    for (auto& [key, members] : groups)
        if (members.size() >= 2) out.push_back(TwinGroup{key, std::move(members)});
    return out;
}

}  // namespace linkhom
