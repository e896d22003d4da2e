#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkhom/decompose.hpp"
#include "linkhom/torsion.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

enum class LinkKind {
    RationalHomologySphere,
    HomotopySphere,
    ConnectedSumS3xS4,
    Mixed,
};

std::string to_string(LinkKind k);

// One fully classified link. torsion in `homology` is Orlik's output; it is
// only certified when torsion_supported (a chain/cycle/Thom-Sebastiani
// representation exists). Rank and |Delta(1)| are valid regardless.
struct LinkRecord {
    WeightSystem ws;
    std::optional<SingularityDecomposition> decomposition;  // canonical first one
    std::size_t decomposition_count = 0;
    Int mu;
    HomologyGroup homology;
    bool torsion_supported = false;
    Int delta_one;
    Int delta_minus_one;
    LinkKind kind = LinkKind::Mixed;
    Int connected_sum_k;  // rank, when kind == ConnectedSumS3xS4
    std::optional<bool> ke_flag;
    std::string description;
};

LinkRecord classify_link(const WeightSystem& ws,
                         std::optional<bool> ke_flag = std::nullopt);

// Lemma shortcut for m = 5 with gcd(d, w_i) = 1 for all i: b3 from the
// elementary-symmetric closed form, torsion exactly (d). Empty when the
// hypothesis fails.
struct CoprimeFastPath {
    Int b3;
    Int torsion;  // the single coefficient d
};

std::optional<CoprimeFastPath> coprime_fast_path(const WeightSystem& ws);

// Twins: records sharing degree, Milnor number and torsion order.
struct TwinKey {
    std::int64_t d = 0;
    Int mu;
    Int h3_order;

    bool operator==(const TwinKey& o) const = default;
};

struct TwinGroup {
    TwinKey key;
    std::vector<std::size_t> members;  // indices into the input records
};

// Groups of size >= 2, ordered by key; members keep input order.
std::vector<TwinGroup> find_twins(const std::vector<LinkRecord>& records);

}  // namespace linkhom
