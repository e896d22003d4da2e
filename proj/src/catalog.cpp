#include "linkhom/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

std::optional<bool> parse_bool_token(std::string t) {
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "t" || t == "yes" || t == "y") return true;
    if (t == "false" || t == "f" || t == "no" || t == "n") return false;
    return std::nullopt;
}

std::optional<std::int64_t> parse_int_token(const std::string& t) {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return std::nullopt;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
    try {
        return std::stoll(t);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct CsvHeader {
    std::vector<std::pair<int, std::size_t>> weight_cols;  // (index in w, column)
    std::optional<std::size_t> degree_col;
    std::optional<std::size_t> ke_col;
};

std::optional<CsvHeader> detect_header(const std::vector<std::string>& fields) {
    CsvHeader h;
    bool any_name = false;
    for (std::size_t c = 0; c < fields.size(); ++c) {
        std::string f = fields[c];
        std::transform(f.begin(), f.end(), f.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        if (f.size() >= 2 && f[0] == 'w' &&
            std::all_of(f.begin() + 1, f.end(),
                        [](unsigned char ch) { return std::isdigit(ch); })) {
            h.weight_cols.emplace_back(std::stoi(f.substr(1)), c);
            any_name = true;
        } else if (f == "d" || f == "degree") {
            h.degree_col = c;
            any_name = true;
        } else if (f == "ke" || f == "ke_flag") {
            h.ke_col = c;
            any_name = true;
        }
    }
    if (!any_name || h.weight_cols.empty()) return std::nullopt;
    std::sort(h.weight_cols.begin(), h.weight_cols.end());
    return h;
}

CatalogEntry parse_csv_row_with_header(const CsvHeader& h,
                                       const std::vector<std::string>& fields,
                                       int line_no) {
    CatalogEntry e;
    e.source_line = line_no;
    for (const auto& [wi, col] : h.weight_cols) {
        if (col >= fields.size() || fields[col].empty()) continue;
        auto v = parse_int_token(fields[col]);
        if (!v) throw ParseError(line_no, "weight field is not an integer: " + fields[col]);
        e.weights.push_back(*v);
    }
    if (h.degree_col && *h.degree_col < fields.size() && !fields[*h.degree_col].empty()) {
        auto v = parse_int_token(fields[*h.degree_col]);
        if (!v) throw ParseError(line_no, "degree field is not an integer");
        e.degree = *v;
    }
    if (h.ke_col && *h.ke_col < fields.size() && !fields[*h.ke_col].empty()) {
        auto b = parse_bool_token(fields[*h.ke_col]);
        if (!b) throw ParseError(line_no, "ke field is not a boolean");
        e.ke_flag = *b;
    }
    if (e.weights.empty()) throw ParseError(line_no, "row has no weights");
    return e;
}

CatalogEntry parse_csv_row_positional(std::vector<std::string> fields, int line_no) {
    CatalogEntry e;
    e.source_line = line_no;
    if (!fields.empty()) {
        if (auto b = parse_bool_token(fields.back())) {
            e.ke_flag = *b;
            fields.pop_back();
        }
    }
    std::vector<std::int64_t> nums;
    for (const std::string& f : fields) {
        if (f.empty()) continue;
        auto v = parse_int_token(f);
        if (!v) throw ParseError(line_no, "field is not an integer: " + f);
        nums.push_back(*v);
    }
    if (nums.empty()) throw ParseError(line_no, "row has no weights");
    // Six numbers read as five weights plus degree (the catalogs are
    // five-variable); any other count is all weights, degree inferred.
    if (nums.size() == 6) {
        e.degree = nums.back();
        nums.pop_back();
    }
    e.weights = std::move(nums);
    return e;
}

void warn_duplicates(ParseResult& result) {
    std::map<std::pair<std::vector<std::int64_t>, std::int64_t>, int> seen;
    for (const CatalogEntry& e : result.entries) {
        std::int64_t d = e.degree.value_or(-1);
        auto key = std::make_pair(e.weights, d);
        auto it = seen.find(key);
        if (it != seen.end()) {
            std::ostringstream os;
            os << "line " << e.source_line << ": duplicate weight vector (first at line "
               << it->second << ")";
            result.warnings.push_back(os.str());
        } else {
            seen.emplace(key, e.source_line);
        }
    }
}

}  // namespace

ParseResult parse_catalog(std::istream& in, CatalogFormat format) {
    ParseResult result;
    std::string line;
    int line_no = 0;

    if (format == CatalogFormat::Jsonl) {
        while (std::getline(in, line)) {
            ++line_no;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            nlohmann::json j = nlohmann::json::parse(t, nullptr, false);
            if (j.is_discarded() || !j.is_object() || !j.contains("w") || !j["w"].is_array())
                throw ParseError(line_no, "expected a JSON object with a \"w\" array");
            CatalogEntry e;
            e.source_line = line_no;
            for (const auto& x : j["w"]) {
                if (!x.is_number_integer()) throw ParseError(line_no, "weights must be integers");
                e.weights.push_back(x.get<std::int64_t>());
            }
            if (j.contains("d")) {
                if (!j["d"].is_number_integer()) throw ParseError(line_no, "d must be an integer");
                e.degree = j["d"].get<std::int64_t>();
            }
            if (j.contains("ke")) {
                if (!j["ke"].is_boolean()) throw ParseError(line_no, "ke must be a boolean");
                e.ke_flag = j["ke"].get<bool>();
            }
            result.entries.push_back(std::move(e));
        }
        warn_duplicates(result);
        return result;
    }

    std::optional<CsvHeader> header;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields = split_csv(t);
        if (first_content_line) {
            first_content_line = false;
            header = detect_header(fields);
            if (header) continue;
        }
        result.entries.push_back(header ? parse_csv_row_with_header(*header, fields, line_no)
                                        : parse_csv_row_positional(fields, line_no));
    }
    warn_duplicates(result);
    return result;
}

std::vector<BatchItem> run_batch(const std::vector<CatalogEntry>& entries,
                                 const BatchOptions& options) {
    std::vector<const CatalogEntry*> selected;
    for (const CatalogEntry& e : entries)
        if (!options.filter_ke || (e.ke_flag && *e.ke_flag)) selected.push_back(&e);

    std::vector<BatchItem> items(selected.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            BatchItem& item = items[i];
            item.entry = *selected[i];
            try {
                WeightSystem ws = make_weight_system(item.entry.weights, item.entry.degree);
                item.record = classify_link(ws, item.entry.ke_flag);
            } catch (const std::exception& ex) {
                item.error = ex.what();
            }
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || items.size() < 2) {
        work(0, items.size());
    } else {
        std::size_t chunk = (items.size() + jobs - 1) / jobs;
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) {
            std::size_t b = std::min(items.size(), t * chunk);
            std::size_t e = std::min(items.size(), b + chunk);
            if (b < e) threads.emplace_back(work, b, e);
        }
        for (auto& th : threads) th.join();
    }
    return items;
}

std::string homology_string(const HomologyGroup& h) {
    std::ostringstream os;
    bool any = false;
    if (sgn(h.rank) > 0) {
        os << "Z";
        if (h.rank > 1) os << "^" << h.rank.get_str();
        any = true;
    }
    std::size_t i = 0;
    while (i < h.torsion.size()) {
        std::size_t j = i;
        while (j < h.torsion.size() && h.torsion[j] == h.torsion[i]) ++j;
        if (any) os << " + ";
        std::size_t count = j - i;
        if (count > 1)
            os << "(Z_" << h.torsion[i].get_str() << ")^" << count;
        else
            os << "Z_" << h.torsion[i].get_str();
        any = true;
        i = j;
    }
    if (!any) return "0";
    return os.str();
}

namespace {

std::string record_h3_string(const LinkRecord& rec) {
    if (rec.torsion_supported) return homology_string(rec.homology);
    HomologyGroup free_only;
    free_only.rank = rec.homology.rank;
    std::string s = homology_string(free_only);
    if (sgn(rec.homology.rank) == 0)
        return "torsion of order " + Int(abs(rec.delta_one)).get_str() + " (unsupported)";
    return s + " (+ torsion unsupported)";
}

std::string weights_string(const std::vector<std::int64_t>& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

std::string to_json(const LinkRecord& rec) {
    nlohmann::json j;
    j["w"] = rec.ws.weights;
    j["d"] = rec.ws.degree;
    if (rec.ke_flag) j["ke"] = *rec.ke_flag;
    j["mu"] = rec.mu.get_str();
    j["fano_positive"] = fano_positive(rec.ws);
    if (rec.decomposition) {
        j["type"] = type_label(*rec.decomposition);
        j["polynomial"] = render_polynomial(*rec.decomposition, rec.ws);
        j["decompositions"] = rec.decomposition_count;
    } else {
        j["type"] = "unsupported";
    }
    j["rank"] = rec.homology.rank.get_str();
    j["torsion_supported"] = rec.torsion_supported;
    nlohmann::json tors = nlohmann::json::array();
    for (const Int& t : rec.homology.torsion) tors.push_back(t.get_str());
    j["torsion"] = std::move(tors);
    j["h3"] = record_h3_string(rec);
    j["delta_one"] = rec.delta_one.get_str();
    j["delta_minus_one"] = rec.delta_minus_one.get_str();
    j["kind"] = to_string(rec.kind);
    j["description"] = rec.description;
    return j.dump();
}

std::string emit(const std::vector<BatchItem>& items, EmitFormat format) {
    std::ostringstream os;
    if (format == EmitFormat::Jsonl) {
        for (const BatchItem& item : items) {
            if (item.record) {
                os << to_json(*item.record) << '\n';
            } else {
                nlohmann::json j;
                j["w"] = item.entry.weights;
                if (item.entry.degree) j["d"] = *item.entry.degree;
                j["error"] = item.error;
                os << j.dump() << '\n';
            }
        }
        return os.str();
    }

    if (format == EmitFormat::Markdown) {
        os << "| w | polynomial | type | d | mu | H3 |\n";
        os << "| --- | --- | --- | --- | --- | --- |\n";
        for (const BatchItem& item : items) {
            if (!item.record) {
                os << "| " << weights_string(item.entry.weights) << " | error: " << item.error
                   << " | | | | |\n";
                continue;
            }
            const LinkRecord& r = *item.record;
            os << "| " << weights_string(r.ws.weights) << " | "
               << (r.decomposition ? render_polynomial(*r.decomposition, r.ws) : "-")
               << " | " << (r.decomposition ? type_label(*r.decomposition) : "unsupported")
               << " | " << r.ws.degree << " | " << r.mu.get_str() << " | "
               << record_h3_string(r) << " |\n";
        }
        return os.str();
    }

    // CSV round-trips through parse_catalog thanks to the header.
    std::size_t max_m = 0;
    for (const BatchItem& item : items)
        max_m = std::max(max_m, item.entry.weights.size());
    if (max_m == 0) max_m = 5;
    for (std::size_t i = 0; i < max_m; ++i) os << 'w' << i << ',';
    os << "d,ke,type,polynomial,mu,h3,error\n";
    for (const BatchItem& item : items) {
        const auto& w = item.entry.weights;
        for (std::size_t i = 0; i < max_m; ++i) {
            if (i < w.size()) os << w[i];
            os << ',';
        }
        if (item.record)
            os << item.record->ws.degree;
        else if (item.entry.degree)
            os << *item.entry.degree;
        os << ',';
        if (item.entry.ke_flag) os << (*item.entry.ke_flag ? "true" : "false");
        os << ',';
        if (item.record) {
            const LinkRecord& r = *item.record;
            os << (r.decomposition ? type_label(*r.decomposition) : "unsupported") << ','
               << (r.decomposition ? render_polynomial(*r.decomposition, r.ws) : "") << ','
               << r.mu.get_str() << ',' << record_h3_string(r) << ',';
        } else {
            os << ",,,," << item.error;
        }
        os << '\n';
    }
    return os.str();
}

ParseResult convert_upstream_text(std::istream& in) {
    ParseResult result;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::int64_t> nums;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isdigit(static_cast<unsigned char>(line[i]))) {
                std::size_t j = i;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
                nums.push_back(std::stoll(line.substr(i, j - i)));
                i = j;
            } else {
                ++i;
            }
        }
        if (nums.size() < 5) continue;  // prose or blank line
        CatalogEntry e;
        e.source_line = line_no;
        e.weights.assign(nums.begin(), nums.begin() + 5);
        e.ke_flag = line.find("KE") != std::string::npos;
        result.entries.push_back(std::move(e));
    }
    warn_duplicates(result);
    return result;
}

}  // namespace linkhom
