#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linkhom/catalog.hpp"
#include "linkhom/covers.hpp"
#include "linkhom/oracle.hpp"

using namespace linkhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEntryFailures = 1;
constexpr int kExitUsage = 2;

WeightSystem ws_from_options(const std::vector<std::int64_t>& weights,
                             std::optional<std::int64_t> degree) {
    return make_weight_system(weights, degree);
}

CatalogFormat parse_format(const std::string& s) {
    if (s == "csv") return CatalogFormat::Csv;
    if (s == "jsonl") return CatalogFormat::Jsonl;
    throw CLI::ValidationError("--format", "expected csv or jsonl");
}

EmitFormat parse_emit(const std::string& s) {
    if (s == "csv") return EmitFormat::Csv;
    if (s == "jsonl") return EmitFormat::Jsonl;
    if (s == "markdown") return EmitFormat::Markdown;
    throw CLI::ValidationError("--emit", "expected csv, jsonl or markdown");
}

ParseResult load_catalog(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_catalog(in, parse_format(format));
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << payload;
}

// Re-derive the record through the brute-force oracles where scale permits;
// any mismatch is a hard failure.
void verify_record(const LinkRecord& rec) {
    const WeightSystem& ws = rec.ws;
    ProductForm form = to_product_form(alexander_divisor(ws));

    if (betti_via_subsets(ws) != rec.homology.rank)
        throw Error("verify: subset Betti formula disagrees");
    if (degree_of(form) != rec.mu) throw Error("verify: degree(Delta) != mu");

    if (rec.mu <= 50000) {
        std::vector<Int> coeffs = expand_polynomial(form);
        if (eval_coeffs(coeffs, Int(1)) != rec.delta_one)
            throw Error("verify: expanded Delta(1) disagrees");
        if (eval_coeffs(coeffs, Int(-1)) != rec.delta_minus_one)
            throw Error("verify: expanded Delta(-1) disagrees");
    }
    if (sgn(rec.homology.rank) == 0 && rec.torsion_supported) {
        Int prod = 1;
        for (const Int& t : rec.homology.torsion) prod *= t;
        if (prod != abs(rec.delta_one))
            throw Error("verify: torsion product != |Delta(1)|");
    }
    if (rec.decomposition) {
        bool pure_bp = true;
        std::vector<std::int64_t> exps;
        for (const Block& b : rec.decomposition->blocks) {
            pure_bp = pure_bp && b.kind == BlockKind::BP;
            if (pure_bp) exps.push_back(b.exps[0]);
        }
        if (pure_bp) {
            Int scale = 1;
            for (std::int64_t a : exps) scale *= (a - 1);
            if (scale <= 1000000 &&
                !(root_multiset_to_divisor(bp_root_multiset(exps)) ==
                  alexander_divisor(ws)))
                throw Error("verify: BP root oracle disagrees with the divisor");
        }
    }
}

nlohmann::json cover_json(const CoverRecord& rec) {
    nlohmann::json j;
    j["p"] = rec.p;
    j["base"] = {{"w", rec.base.weights}, {"d", rec.base.degree}};
    j["cover"] = {{"w", rec.cover_ws.weights}, {"d", rec.cover_ws.degree}};
    j["fano_excess"] = rec.fano_excess;
    j["delta_one"] = rec.delta_one.get_str();
    j["delta_minus_one"] = rec.delta_minus_one.get_str();
    j["sphere_type"] = to_string(rec.sphere_type);
    return j;
}

nlohmann::json decomposition_json(const SingularityDecomposition& dec,
                                  const WeightSystem& ws) {
    nlohmann::json j;
    j["type"] = type_label(dec);
    j["polynomial"] = render_polynomial(dec, ws);
    nlohmann::json blocks = nlohmann::json::array();
    for (const Block& b : dec.blocks) {
        nlohmann::json bj;
        bj["kind"] = b.kind == BlockKind::BP ? "BP"
                     : b.kind == BlockKind::Chain ? "Chain"
                                                  : "Cycle";
        bj["vars"] = b.vars;
        bj["exps"] = b.exps;
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral homology and diffeomorphism invariants of "
                 "weighted-homogeneous hypersurface singularity links"};
    app.require_subcommand(1);

    std::vector<std::int64_t> weights;
    std::optional<std::int64_t> degree;
    std::int64_t p = 2;
    std::string input, format = "csv", emit_format = "markdown", out_path;
    bool filter_ke = false, verify = false, all_decs = false;
    int jobs = 1;

    auto add_ws_options = [&](CLI::App* cmd) {
        cmd->add_option("--weights", weights, "comma-separated weights w0,...,w_{m-1}")
            ->required()
            ->delimiter(',');
        cmd->add_option("--degree", degree, "degree d (default: sum(w) - 1)");
    };

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a single weight system");
    add_ws_options(classify_cmd);
    classify_cmd->add_flag("--verify", verify, "re-derive through brute-force oracles");

    CLI::App* batch_cmd = app.add_subcommand("batch", "classify a catalog file");
    batch_cmd->add_option("--input", input, "catalog file")->required();
    batch_cmd->add_option("--format", format, "csv or jsonl");
    batch_cmd->add_flag("--filter", filter_ke,
                        "keep only entries whose ke flag is true");
    batch_cmd->add_option("--emit", emit_format, "csv, jsonl or markdown");
    batch_cmd->add_option("--out", out_path, "output file (default stdout)");
    batch_cmd->add_option("--jobs", jobs, "worker threads");

    CLI::App* cover_cmd = app.add_subcommand("cover", "branched cover record");
    add_ws_options(cover_cmd);
    cover_cmd->add_option("--p", p, "cover order p >= 2")->required();

    CLI::App* twins_cmd = app.add_subcommand("twins", "twin groups in a catalog");
    twins_cmd->add_option("--input", input, "catalog file")->required();
    twins_cmd->add_option("--format", format, "csv or jsonl");

    CLI::App* dec_cmd =
        app.add_subcommand("decompose", "invertible-polynomial representations");
    add_ws_options(dec_cmd);
    dec_cmd->add_flag("--all", all_decs, "print every decomposition");

    CLI::App* convert_cmd = app.add_subcommand(
        "convert-jk", "best-effort conversion of the upstream weight list");
    convert_cmd->add_option("--input", input, "upstream text file")->required();
    convert_cmd->add_option("--out", out_path, "output csv (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            LinkRecord rec = classify_link(ws_from_options(weights, degree));
            if (verify) verify_record(rec);
            nlohmann::json j = nlohmann::json::parse(to_json(rec));
            if (verify) j["verified"] = true;
            std::cout << j.dump() << "\n";
            return kExitOk;
        }

        if (batch_cmd->parsed()) {
            ParseResult parsed = load_catalog(input, format);
            for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
            BatchOptions opt;
            opt.filter_ke = filter_ke;
            opt.jobs = jobs;
            auto items = run_batch(parsed.entries, opt);
            write_output(out_path, emit(items, parse_emit(emit_format)));
            for (const BatchItem& item : items)
                if (!item.error.empty()) return kExitEntryFailures;
            return kExitOk;
        }

        if (cover_cmd->parsed()) {
            CoverRecord rec = cover_record(ws_from_options(weights, degree), p);
            std::cout << cover_json(rec).dump() << "\n";
            return kExitOk;
        }

        if (twins_cmd->parsed()) {
            ParseResult parsed = load_catalog(input, format);
            auto items = run_batch(parsed.entries, BatchOptions{});
            std::vector<LinkRecord> records;
            std::vector<int> lines;
            bool failures = false;
            for (const BatchItem& item : items) {
                if (item.record) {
                    records.push_back(*item.record);
                    lines.push_back(item.entry.source_line);
                } else {
                    failures = true;
                    std::cerr << "warning: line " << item.entry.source_line << ": "
                              << item.error << "\n";
                }
            }
            nlohmann::json groups = nlohmann::json::array();
            for (const TwinGroup& g : find_twins(records)) {
                nlohmann::json gj;
                gj["d"] = g.key.d;
                gj["mu"] = g.key.mu.get_str();
                gj["h3_order"] = g.key.h3_order.get_str();
                nlohmann::json members = nlohmann::json::array();
                for (std::size_t idx : g.members) {
                    members.push_back({{"w", records[idx].ws.weights},
                                       {"line", lines[idx]}});
                }
                gj["members"] = std::move(members);
                groups.push_back(std::move(gj));
            }
            std::cout << groups.dump() << "\n";
            return failures ? kExitEntryFailures : kExitOk;
        }

        if (dec_cmd->parsed()) {
            WeightSystem ws = ws_from_options(weights, degree);
            auto decs = find_decompositions(ws);
            nlohmann::json j;
            j["w"] = ws.weights;
            j["d"] = ws.degree;
            j["count"] = decs.size();
            if (all_decs) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& d : decs) arr.push_back(decomposition_json(d, ws));
                j["decompositions"] = std::move(arr);
            } else if (!decs.empty()) {
                j["decomposition"] = decomposition_json(decs.front(), ws);
            }
            std::cout << j.dump() << "\n";
            return kExitOk;
        }

        if (convert_cmd->parsed()) {
            std::ifstream in(input);
            if (!in) throw ParseError(0, "cannot open " + input);
            ParseResult res = convert_upstream_text(in);
            for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";
            std::ostringstream os;
            for (const CatalogEntry& e : res.entries) {
                for (std::size_t i = 0; i < e.weights.size(); ++i) os << e.weights[i] << ',';
                os << (e.ke_flag.value_or(false) ? "true" : "false") << '\n';
            }
            write_output(out_path, os.str());
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEntryFailures;
    }
    return kExitUsage;
}
