// Command-line surface for the simplest cubic field toolkit.
//
// Subcommands: field, scan, h16, thue, coincide, bounds, verify-tables, count66.
// Output: human-readable table (default), --format json|csv, --out FILE.
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 unresolved result.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "scf/refdata.hpp"
#include "scf/scan.hpp"
#include "scf/thue.hpp"

using json = nlohmann::ordered_json;
using namespace scf;

namespace {

constexpr int kSchemaVersion = 1;

struct Output {
    std::string format = "table";
    std::string path;

    void emit(const std::string& table_text, const json& doc) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw CLI::RuntimeError("cannot open output file " + path, 2);
            os = &file;
        }
        if (format == "json")
            *os << doc.dump(2) << "\n";
        else
            *os << table_text;
    }
};

std::string csv_escape(const std::string& s) { return s; }  // no commas appear in our fields

json scan_rows_json(const ScanResult& res) {
    json rows = json::array();
    for (const auto& r : res.rows) {
        json row;
        row["m"] = r.m;
        row["D"] = r.D;
        row["factorization"] = r.D_factors;
        row["conductor"] = r.conductor;
        row["index"] = r.index;
        row["index_class"] = index_class_name(r.index_class);
        if (r.h)
            row["h"] = *r.h;
        else
            row["h"] = nullptr;
        row["unit_index"] = r.unit_index;
        row["resolved"] = r.resolved;
        row["constraints_pass"] = r.constraints_pass;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scan_rows_csv(const ScanResult& res) {
    std::string s = "m,D,factorization,conductor,index,index_class,h,unit_index,resolved,constraints_pass\n";
    for (const auto& r : res.rows) {
        s += std::to_string(r.m) + "," + std::to_string(r.D) + "," + csv_escape(r.D_factors) + "," +
             std::to_string(r.conductor) + "," + std::to_string(r.index) + "," + index_class_name(r.index_class) +
             "," + (r.h ? std::to_string(*r.h) : "") + "," + std::to_string(r.unit_index) + "," +
             (r.resolved ? "1" : "0") + "," + (r.constraints_pass ? "1" : "0") + "\n";
    }
    return s;
}

std::string scan_rows_table(const ScanResult& res) {
    char buf[256];
    std::string s;
    snprintf(buf, sizeof buf, "%9s %16s %10s %10s %6s %26s %6s %3s\n", "m", "D", "conductor", "index", "h", "factorization",
             "flags", "u");
    s += buf;
    for (const auto& r : res.rows) {
        snprintf(buf, sizeof buf, "%9lld %16llu %10llu %10llu %6s %26s %6s %3llu\n", (long long)r.m,
                 (unsigned long long)r.D, (unsigned long long)r.conductor, (unsigned long long)r.index,
                 r.h ? std::to_string(*r.h).c_str() : "?", r.D_factors.c_str(),
                 r.resolved ? (r.constraints_pass ? "ok" : "CONS") : "UNRES", (unsigned long long)r.unit_index);
        s += buf;
    }
    s += "total " + std::to_string(res.summary.total) + ", unresolved " + std::to_string(res.summary.unresolved) + "\n";
    std::string buckets;
    for (const auto& [h, c] : res.summary.h_buckets) buckets += "h=" + std::to_string(h) + ":" + std::to_string(c) + " ";
    if (!buckets.empty()) s += "buckets: " + buckets + "\n";
    return s;
}

json scan_doc(const std::string& cmd, const ScanResult& res) {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = cmd;
    doc["rows"] = scan_rows_json(res);
    json sum;
    sum["filter"] = res.summary.filter;
    sum["total"] = res.summary.total;
    sum["unresolved"] = res.summary.unresolved;
    json buckets;
    for (const auto& [h, c] : res.summary.h_buckets) buckets[std::to_string(h)] = c;
    sum["h_buckets"] = buckets;
    sum["range"] = {res.summary.m_lo, res.summary.m_hi};
    doc["summary"] = sum;
    return doc;
}

std::pair<i64, i64> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected A:B");
    return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplest cubic fields: invariants, class numbers, Thue equations"};
    app.require_subcommand(1);

    Output out;
    int threads = 0;
    app.add_option("--format", out.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", out.path, "write output to a file");
    app.add_option("--threads", threads, "worker threads (default: SCL_THREADS or hardware)");

    // field M
    i64 field_m = 0;
    auto* c_field = app.add_subcommand("field", "invariants and class number of one field");
    c_field->add_option("m", field_m, "field parameter")->required();

    // scan
    std::string range_str, subcase_str = "all", index_str = "all";
    u64 hmax = 1000;
    auto* c_scan = app.add_subcommand("scan", "enumerate fields with h <= hmax by index subcase");
    c_scan->add_option("--range", range_str, "inclusive m range A:B (default: cutoff range for the index)");
    c_scan->add_option("--index", index_str, "1|3|27|all")->check(CLI::IsMember({"1", "3", "27", "all"}));
    c_scan->add_option("--subcase", subcase_str, "prime_f|composite_f|nine_p|nine_s|all")
        ->check(CLI::IsMember({"prime_f", "composite_f", "nine_p", "nine_s", "all"}));
    c_scan->add_option("--hmax", hmax, "class number cap");

    // h16
    std::string h16_range = "-1:10000000";
    bool no_prefilter = false;
    auto* c_h16 = app.add_subcommand("h16", "sweep for class number below 16");
    c_h16->add_option("--range", h16_range, "inclusive m range A:B");
    c_h16->add_flag("--no-prefilter", no_prefilter, "compute every m (audit mode)");

    // thue
    i64 thue_m = 0, thue_B = 2000;
    std::string lambda_mode = "all";
    auto* c_thue = app.add_subcommand("thue", "bounded Thue search for F_m(x,y) = lambda | m^2+3m+9");
    c_thue->add_option("m", thue_m)->required();
    c_thue->add_option("--bound", thue_B, "search box half-width");
    c_thue->add_option("--lambda", lambda_mode, "all|unit")->check(CLI::IsMember({"all", "unit"}));

    // coincide
    i64 coi_max = 2500, coi_B = 2000;
    auto* c_coi = app.add_subcommand("coincide", "field coincidences L_m = L_n for m < n <= M");
    c_coi->add_option("--max", coi_max,
                      "upper end of the scan (no coincidence has m beyond " +
                          std::to_string(kCoincidenceCeiling) + ")");
    c_coi->add_option("--bound", coi_B, "Thue search bound");

    // bounds
    int b_index = 1;
    double b_hmax = 1000;
    std::string b_kind = "louboutin";
    auto* c_bounds = app.add_subcommand("bounds", "smallest m past which the lower bound exceeds hmax");
    c_bounds->add_option("--index", b_index, "1|3|27")->check(CLI::IsMember({"1", "3", "27"}));
    c_bounds->add_option("--hmax", b_hmax, "class number target");
    c_bounds->add_option("--kind", b_kind, "louboutin|lettl")->check(CLI::IsMember({"louboutin", "lettl"}));

    // verify-tables
    auto* c_verify = app.add_subcommand("verify-tables", "recompute every embedded reference row");

    // count66
    i64 c66_B = 2000;
    auto* c_66 = app.add_subcommand("count66", "nontrivial solutions over the coincidence family");
    c_66->add_option("--bound", c66_B, "search box half-width");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit clean; any parse failure is a usage error
    }

    try {
        if (*c_field) {
            ClassNumberReport rep = class_number(field_m);
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = "field";
            json row;
            row["m_input"] = field_m;
            row["m"] = rep.field.m;
            row["D"] = rep.field.D;
            row["factorization"] = render_factorization(rep.field.D_factors);
            row["b"] = rep.field.b;
            row["c"] = rep.field.c;
            row["r3"] = rep.field.r3;
            row["gamma"] = rep.field.gamma;
            row["conductor"] = rep.field.conductor;
            row["field_disc"] = to_string_u128(rep.field.field_disc);
            row["index"] = rep.field.index;
            row["index_class"] = index_class_name(rep.field.index_class);
            row["l1_abs_squared"] = rep.l_value.abs_squared;
            row["reg_E"] = rep.reg_E;
            row["H_raw"] = rep.H_raw;
            row["unit_index"] = rep.unit_index;
            row["h"] = rep.resolved ? json(rep.H_rounded) : json(nullptr);
            row["residual"] = rep.round_residual;
            row["constraints_pass"] = rep.constraints.all_pass();
            doc["rows"] = json::array({row});
            char buf[512];
            snprintf(buf, sizeof buf,
                     "m = %lld (input %lld)\nD = %llu = %s\nconductor f = %llu, index = %llu (%s), gamma = %d\n"
                     "|L(1,chi)|^2 = %.12g, Reg(E) = %.12g, unit index u = %llu\nH_raw = %.12g -> h = %s (residual %.3g)\n",
                     (long long)rep.field.m, (long long)field_m, (unsigned long long)rep.field.D,
                     render_factorization(rep.field.D_factors).c_str(), (unsigned long long)rep.field.conductor,
                     (unsigned long long)rep.field.index, index_class_name(rep.field.index_class), rep.field.gamma,
                     rep.l_value.abs_squared, rep.reg_E, (unsigned long long)rep.unit_index, rep.H_raw,
                     rep.resolved ? std::to_string(rep.H_rounded).c_str() : "UNRESOLVED", rep.round_residual);
            if (out.format == "csv") {
                ScanResult one;
                one.rows.push_back({rep.field.m, rep.field.D, render_factorization(rep.field.D_factors),
                                    rep.field.conductor, rep.field.index, rep.field.index_class,
                                    rep.resolved ? std::optional<u64>(rep.H_rounded) : std::nullopt, rep.unit_index,
                                    rep.constraints.all_pass(), rep.resolved});
                out.emit(scan_rows_csv(one), doc);
            } else {
                out.emit(buf, doc);
            }
            return rep.resolved ? 0 : 3;
        }

        if (*c_scan) {
            std::vector<int> indices;
            if (index_str == "all")
                indices = {1, 3, 27};
            else
                indices = {std::stoi(index_str)};
            ScanResult merged;
            for (int idx : indices) {
                i64 lo = -1, hi;
                if (!range_str.empty()) {
                    auto [a, b] = parse_range(range_str);
                    lo = a;
                    hi = b;
                } else {
                    hi = cutoff_m(idx, (double)hmax).M - 1;
                }
                std::cerr << "scan: index " << idx << " over [" << lo << ", " << hi << "]\n";
                ScanResult r = scan_small_class(lo, hi, idx, subcase_from_string(subcase_str), hmax, threads);
                merged.rows.insert(merged.rows.end(), r.rows.begin(), r.rows.end());
                merged.summary.total += r.summary.total;
                merged.summary.unresolved += r.summary.unresolved;
                for (const auto& [h, c] : r.summary.h_buckets) merged.summary.h_buckets[h] += c;
                merged.summary.filter += (merged.summary.filter.empty() ? "" : "; ") + r.summary.filter;
            }
            std::stable_sort(merged.rows.begin(), merged.rows.end(),
                             [](const ScanRow& a, const ScanRow& b) { return a.m < b.m; });
            std::string cmd = "scan --index " + index_str + " --subcase " + subcase_str + " --hmax " + std::to_string(hmax);
            if (!range_str.empty()) cmd += " --range " + range_str;
            out.emit(out.format == "csv" ? scan_rows_csv(merged) : scan_rows_table(merged), scan_doc(cmd, merged));
            return merged.summary.unresolved == 0 ? 0 : 3;
        }

        if (*c_h16) {
            auto [lo, hi] = parse_range(h16_range);
            ScanResult r = scan_h_below_16(lo, hi, !no_prefilter, threads);
            std::string cmd = "h16 --range " + h16_range + (no_prefilter ? " --no-prefilter" : "");
            out.emit(out.format == "csv" ? scan_rows_csv(r) : scan_rows_table(r), scan_doc(cmd, r));
            return r.summary.unresolved == 0 ? 0 : 3;
        }

        if (*c_thue) {
            SimplestCubicField F = build_field(thue_m);
            std::vector<u64> lambdas =
                lambda_mode == "unit" ? std::vector<u64>{1} : divisors_u64(F.D_factors);
            auto sols = solve_bounded(F.m, lambdas, thue_B);
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = "thue " + std::to_string(thue_m);
            json rows = json::array();
            std::string text = "F_" + std::to_string(F.m) + "(x,y) = lambda, lambda | " + std::to_string(F.D) +
                               ", box " + std::to_string(thue_B) + "\n";
            int nontrivial = 0;
            for (const auto& s : sols) {
                json r;
                r["x"] = s.x;
                r["y"] = s.y;
                r["lambda"] = s.lambda;
                r["trivial"] = s.trivial;
                r["orbit"] = {s.orbit_rep.first, s.orbit_rep.second};
                if (s.target_valid && !s.trivial) r["target_n"] = s.target_n;
                rows.push_back(r);
                if (!s.trivial) {
                    ++nontrivial;
                    text += "  (" + std::to_string(s.x) + ", " + std::to_string(s.y) + ")  lambda = " +
                            std::to_string(s.lambda) + "  ->  n = " + std::to_string(s.target_n) + "\n";
                }
            }
            doc["rows"] = rows;
            text += std::to_string(sols.size()) + " solutions, " + std::to_string(nontrivial) + " nontrivial\n";
            out.emit(text, doc);
            return 0;
        }

        if (*c_coi) {
            auto pairs = coincidence_scan(coi_max, coi_B, threads);
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = "coincide --max " + std::to_string(coi_max);
            json rows = json::array();
            std::string text;
            for (const auto& p : pairs) {
                json r;
                r["m"] = p.m;
                r["n"] = p.n;
                r["conductor"] = p.shared_conductor;
                rows.push_back(r);
                text += "L_" + std::to_string(p.m) + " = L_" + std::to_string(p.n) +
                        "  (conductor " + std::to_string(p.shared_conductor) + ")\n";
            }
            doc["rows"] = rows;
            text += std::to_string(pairs.size()) + " coincident pairs\n";
            out.emit(text, doc);
            return 0;
        }

        if (*c_bounds) {
            BoundKind kind = b_kind == "lettl" ? BoundKind::Lettl : BoundKind::Louboutin;
            Cutoff c = cutoff_m(b_index, b_hmax, kind);
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = "bounds --index " + std::to_string(b_index) + " --hmax " + std::to_string(b_hmax);
            doc["rows"] = json::array({{{"index", b_index}, {"hmax", b_hmax}, {"kind", b_kind}, {"M", c.M},
                                        {"bound_at_M", c.bound_at_M}}});
            char buf[256];
            snprintf(buf, sizeof buf, "index %d, hmax %g (%s): bound exceeds hmax for all m >= %lld (bound there %.6f)\n",
                     b_index, b_hmax, b_kind.c_str(), (long long)c.M, c.bound_at_M);
            out.emit(buf, doc);
            return 0;
        }

        if (*c_verify) {
            TableVerifyResult r = verify_tables(threads);
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = "verify-tables";
            json rows = json::array();
            std::string text;
            for (const auto& row : r.rows) {
                json j;
                j["m"] = row.m;
                j["pass"] = row.pass;
                j["unit_index"] = row.unit_index;
                if (!row.pass) j["stage"] = row.stage;
                rows.push_back(j);
                if (!row.pass)
                    text += "FAIL m = " + std::to_string(row.m) + " at stage " + row.stage + "\n";
            }
            doc["rows"] = rows;
            text += std::to_string(r.passed) + "/" + std::to_string(r.passed + r.failed) + " rows pass\n";
            out.emit(text, doc);
            return r.failed == 0 ? 0 : 1;
        }

        if (*c_66) {
            Count66Result r = count_nontrivial_66(c66_B);
            json doc;
            doc["schema"] = kSchemaVersion;
            doc["command"] = "count66 --bound " + std::to_string(c66_B);
            doc["rows"] = json::array({{{"total", r.total}, {"orbit_structure_ok", r.orbit_structure_ok}}});
            std::string text = std::to_string(r.total) + " nontrivial solutions (orbit structure " +
                               (r.orbit_structure_ok ? "ok" : "BROKEN") + ")\n";
            out.emit(text, doc);
            return (r.total == 66 && r.orbit_structure_ok) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
