#include "linkhom/decompose.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

int kind_rank(BlockKind k) {
    switch (k) {
        case BlockKind::BP: return 0;
        case BlockKind::Chain: return 1;
        case BlockKind::Cycle: return 2;
    }
    return 3;
}

std::strong_ordering compare_blocks(const Block& a, const Block& b) {
    if (int c = kind_rank(a.kind) - kind_rank(b.kind); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.vars <=> b.vars; c != 0) return c;
    return a.exps <=> b.exps;
}

std::strong_ordering compare_decs(const SingularityDecomposition& a,
                                  const SingularityDecomposition& b) {
    std::size_t n = std::min(a.blocks.size(), b.blocks.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = compare_blocks(a.blocks[i], b.blocks[i]); c != 0) return c;
    return a.blocks.size() <=> b.blocks.size();
}

// Exponent forced on a block head: d = a * w, a >= 2.
std::optional<std::int64_t> head_exp(const WeightSystem& ws, int var) {
    std::int64_t w = ws.weights[var];
    if (ws.degree % w != 0) return std::nullopt;
    std::int64_t a = ws.degree / w;
    if (a < 2) return std::nullopt;
    return a;
}

// Exponent forced on a follower: d = w_prev + a * w, a >= 1.
std::optional<std::int64_t> follow_exp(const WeightSystem& ws, int prev, int var) {
    std::int64_t rest = ws.degree - ws.weights[prev];
    std::int64_t w = ws.weights[var];
    if (rest < w || rest % w != 0) return std::nullopt;
    return rest / w;
}

// Even-length cycles exclude the two all-ones parity patterns.
bool cycle_parity_ok(const std::vector<std::int64_t>& exps) {
    if (exps.size() % 2 != 0) return true;
    bool all_odd_one = true, all_even_one = true;  // positions 1-based
    for (std::size_t p = 0; p < exps.size(); ++p) {
        if (p % 2 == 0)
            all_odd_one = all_odd_one && exps[p] == 1;
        else
            all_even_one = all_even_one && exps[p] == 1;
    }
    return !all_odd_one && !all_even_one;
}

void rotate_cycle_to_min(Block& b) {
    auto it = std::min_element(b.vars.begin(), b.vars.end());
    auto shift = static_cast<std::size_t>(it - b.vars.begin());
    std::rotate(b.vars.begin(), b.vars.begin() + shift, b.vars.end());
    std::rotate(b.exps.begin(), b.exps.begin() + shift, b.exps.end());
}

void canonicalize(SingularityDecomposition& dec) {
    for (Block& b : dec.blocks)
        if (b.kind == BlockKind::Cycle) rotate_cycle_to_min(b);
    std::sort(dec.blocks.begin(), dec.blocks.end(), [](const Block& a, const Block& b) {
        if (int c = kind_rank(a.kind) - kind_rank(b.kind); c != 0) return c < 0;
        return a.min_var() < b.min_var();
    });
}

struct Search {
    const WeightSystem& ws;
    std::vector<SingularityDecomposition> out;
    std::vector<Block> stack;
    unsigned full_mask;

    explicit Search(const WeightSystem& w)
        : ws(w), full_mask((1u << w.var_count()) - 1u) {}

    void run() { descend(0); }

    void descend(unsigned used) {
        if (used == full_mask) {
            SingularityDecomposition dec{stack};
            canonicalize(dec);
            out.push_back(std::move(dec));
            return;
        }
        int anchor = 0;
        while (used & (1u << anchor)) ++anchor;

        if (auto a = head_exp(ws, anchor)) {
            stack.push_back(Block{BlockKind::BP, {anchor}, {*a}});
            descend(used | (1u << anchor));
            stack.pop_back();
        }
        // Chains may hold the anchor at any position; grow sequences var by
        // var and emit every prefix of length >= 2 that contains it.
        for (std::size_t i = 0; i < ws.var_count(); ++i) {
            if (used & (1u << i)) continue;
            if (auto a = head_exp(ws, static_cast<int>(i))) {
                std::vector<int> seq{static_cast<int>(i)};
                std::vector<std::int64_t> exps{*a};
                grow_chain(used | (1u << i), anchor, seq, exps);
            }
        }
        grow_cycle_start(used, anchor);
    }

    void grow_chain(unsigned used, int anchor, std::vector<int>& seq,
                    std::vector<std::int64_t>& exps) {
        if (seq.size() >= 2 &&
            std::find(seq.begin(), seq.end(), anchor) != seq.end()) {
            stack.push_back(Block{BlockKind::Chain, seq, exps});
            descend(used);
            stack.pop_back();
        }
        for (std::size_t i = 0; i < ws.var_count(); ++i) {
            if (used & (1u << i)) continue;
            if (auto a = follow_exp(ws, seq.back(), static_cast<int>(i))) {
                seq.push_back(static_cast<int>(i));
                exps.push_back(*a);
                grow_chain(used | (1u << i), anchor, seq, exps);
                exps.pop_back();
                seq.pop_back();
            }
        }
    }

    // Cycles are rotation classes; pinning the anchor to position one
    // enumerates each class exactly once.
    void grow_cycle_start(unsigned used, int anchor) {
        std::vector<int> seq{anchor};
        grow_cycle(used | (1u << anchor), seq);
    }

    void grow_cycle(unsigned used, std::vector<int>& seq) {
        if (seq.size() >= 2) try_close_cycle(used, seq);
        for (std::size_t i = 0; i < ws.var_count(); ++i) {
            if (used & (1u << i)) continue;
            // Interior exponents must exist; checked again on closure.
            if (!follow_exp(ws, seq.back(), static_cast<int>(i))) continue;
            seq.push_back(static_cast<int>(i));
            grow_cycle(used | (1u << i), seq);
            seq.pop_back();
        }
    }

    void try_close_cycle(unsigned used, const std::vector<int>& seq) {
        std::size_t k = seq.size();
        std::vector<std::int64_t> exps(k);
        for (std::size_t j = 0; j < k; ++j) {
            int prev = seq[(j + k - 1) % k];
            auto a = follow_exp(ws, prev, seq[j]);
            if (!a) return;
            exps[j] = *a;
        }
        if (!cycle_parity_ok(exps)) return;
        stack.push_back(Block{BlockKind::Cycle, seq, exps});
        descend(used);
        stack.pop_back();
    }
};

}  // namespace

int Block::min_var() const { return *std::min_element(vars.begin(), vars.end()); }

bool structurally_valid(const SingularityDecomposition& dec, std::size_t var_count) {
    std::vector<bool> seen(var_count, false);
    for (const Block& b : dec.blocks) {
        if (b.vars.empty() || b.vars.size() != b.exps.size()) return false;
        for (int v : b.vars) {
            if (v < 0 || static_cast<std::size_t>(v) >= var_count || seen[v]) return false;
            seen[v] = true;
        }
        switch (b.kind) {
            case BlockKind::BP:
                if (b.vars.size() != 1 || b.exps[0] < 2) return false;
                break;
            case BlockKind::Chain:
                if (b.exps[0] < 2) return false;
                for (std::size_t j = 1; j < b.exps.size(); ++j)
                    if (b.exps[j] < 1) return false;
                break;
            case BlockKind::Cycle:
                if (b.vars.size() < 2) return false;
                for (std::int64_t a : b.exps)
                    if (a < 1) return false;
                if (!cycle_parity_ok(b.exps)) return false;
                break;
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

bool verify_decomposition(const SingularityDecomposition& dec, const WeightSystem& ws) {
    if (!structurally_valid(dec, ws.var_count())) return false;
    for (const Block& b : dec.blocks) {
        std::size_t k = b.vars.size();
        for (std::size_t j = 0; j < k; ++j) {
            Int deg = Int(b.exps[j]) * ws.weights[b.vars[j]];
            bool has_cofactor =
                (b.kind == BlockKind::Chain && j > 0) || b.kind == BlockKind::Cycle;
            if (has_cofactor) {
                int prev = b.kind == BlockKind::Cycle ? b.vars[(j + k - 1) % k]
                                                      : b.vars[j - 1];
                deg += ws.weights[prev];
            }
            if (deg != ws.degree) return false;
        }
    }
    return true;
}

std::vector<SingularityDecomposition> find_decompositions(const WeightSystem& ws) {
    Search s(ws);
    s.run();
    std::sort(s.out.begin(), s.out.end(),
              [](const auto& a, const auto& b) { return compare_decs(a, b) < 0; });
    s.out.erase(std::unique(s.out.begin(), s.out.end()), s.out.end());
    return s.out;
}

std::string type_label(const SingularityDecomposition& dec) {
    std::vector<std::string> tokens;
    bool bp_seen = false;
    for (const Block& b : dec.blocks) {
        switch (b.kind) {
            case BlockKind::BP:
                if (!bp_seen) tokens.push_back("BP");
                bp_seen = true;
                break;
            case BlockKind::Chain: tokens.push_back("Chain"); break;
            case BlockKind::Cycle: tokens.push_back("Cycle"); break;
        }
    }
    std::string label;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) label += " + ";
        label += tokens[i];
    }
    return label;
}

namespace {

void render_power(std::ostringstream& os, int var, std::int64_t exp) {
    os << 'z' << var;
    if (exp != 1) os << '^' << exp;
}

}  // namespace

std::string render_polynomial(const SingularityDecomposition& dec, const WeightSystem& ws) {
    if (!verify_decomposition(dec, ws))
        throw Error("render_polynomial: decomposition does not match the weight system");
    std::ostringstream os;
    bool first = true;
    for (const Block& b : dec.blocks) {
        std::size_t k = b.vars.size();
        for (std::size_t j = 0; j < k; ++j) {
            if (!first) os << '+';
            first = false;
            if (b.kind == BlockKind::Cycle) {
                os << 'z' << b.vars[(j + k - 1) % k] << ' ';
            } else if (b.kind == BlockKind::Chain && j > 0) {
                os << 'z' << b.vars[j - 1] << ' ';
            }
            render_power(os, b.vars[j], b.exps[j]);
        }
    }
    return os.str();
}

WeightSystem thom_sebastiani_extend(const WeightSystem& ws, int k) {
    if (k < 0) throw Error("thom_sebastiani_extend requires k >= 0");
    if (k == 0) return ws;
    std::vector<std::int64_t> w;
    std::int64_t d;
    if (ws.degree % 2 == 0) {
        d = ws.degree;
        w.assign(static_cast<std::size_t>(k), ws.degree / 2);
        w.insert(w.end(), ws.weights.begin(), ws.weights.end());
    } else {
        d = 2 * ws.degree;
        w.assign(static_cast<std::size_t>(k), ws.degree);
        for (std::int64_t wi : ws.weights) w.push_back(2 * wi);
    }
    return make_weight_system(std::move(w), d);
}

}  // namespace linkhom
