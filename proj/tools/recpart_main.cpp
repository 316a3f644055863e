// Batch front door: statistic tables, three-way verification, asymptotic
// reports, and raw enumeration export.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recpart/asym.hpp"
#include "recpart/closedform.hpp"
#include "recpart/oracle.hpp"
#include "recpart/rgf.hpp"
#include "recpart/series.hpp"
#include "recpart/verify.hpp"

using json = nlohmann::json;
using namespace recpart;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "4", "2..5" (inclusive) or "50,100,200".
std::vector<long> parse_values(const std::string& text) {
    std::vector<long> out;
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        long lo = std::stol(text.substr(0, dots));
        long hi = std::stol(text.substr(dots + 2));
        for (long v = lo; v <= hi; ++v) out.push_back(v);
    } else {
        size_t pos = 0;
        while (pos < text.size()) {
            size_t comma = text.find(',', pos);
            if (comma == std::string::npos) comma = text.size();
            out.push_back(std::stol(text.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    if (out.empty()) throw UsageError("empty range: " + text);
    return out;
}

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Row {
    std::string stat;
    long n = 0;
    long k = -1;      // -1: not applicable
    long param = -1;  // -1: not applicable
    std::string value;
    std::string source;
};

void emit_rows(const std::vector<Row>& rows, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj;
            obj["stat"] = r.stat;
            obj["n"] = r.n;
            obj["k"] = r.k >= 0 ? json(r.k) : json(nullptr);
            obj["param"] = r.param >= 0 ? json(r.param) : json(nullptr);
            obj["value"] = r.value;
            obj["source"] = r.source;
            arr.push_back(obj);
        }
        std::cout << arr.dump() << "\n";
        return;
    }
    std::cout << "stat,n,k,param,value,source\n";
    for (const auto& r : rows) {
        std::cout << r.stat << ',' << r.n << ',';
        if (r.k >= 0) std::cout << r.k;
        std::cout << ',';
        if (r.param >= 0) std::cout << r.param;
        std::cout << ',' << r.value << ',' << r.source << "\n";
    }
}

struct TableConfig {
    std::string stat;
    std::string n_range, k_range = "", r_range = "", h_range = "";
    std::string format = "csv";
    int cap = kDefaultOracleCap;
    int threads = 1;
};

void add_row(std::vector<Row>& rows, const std::string& stat, long n, long k,
             long param, const Int& value, const std::string& source) {
    rows.push_back({stat, n, k, param, value.get_str(), source});
}

int cmd_table(const TableConfig& cfg) {
    NumberTables tables;
    std::vector<long> ns = parse_values(cfg.n_range);
    std::vector<Row> rows;

    auto ks_for = [&](long n) {
        std::vector<long> ks =
            cfg.k_range.empty() ? std::vector<long>{} : parse_values(cfg.k_range);
        if (ks.empty())
            for (long k = 1; k <= n; ++k) ks.push_back(k);
        std::vector<long> valid;
        for (long k : ks)
            if (k >= 1 && k <= n) valid.push_back(k);
        return valid;
    };
    auto rs_for = [&](long n, long k) {
        if (!cfg.r_range.empty()) return parse_values(cfg.r_range);
        std::vector<long> rs;
        long hi = (cfg.stat == "weak-h1-count") ? n - 1 : k - 1;
        for (long r = 0; r <= hi; ++r) rs.push_back(r);
        return rs;
    };
    auto hs_for = [&](long k) {
        if (!cfg.h_range.empty()) return parse_values(cfg.h_range);
        std::vector<long> hs;
        for (long h = 1; h <= k - 1; ++h) hs.push_back(h);
        return hs;
    };

    const std::string& stat = cfg.stat;
    for (long n : ns) {
        if (stat == "bell") {
            add_row(rows, stat, n, -1, -1, tables.bell(n), "closedform");
        } else if (stat == "strong-h1-total-all" || stat == "strong-height-total-all" ||
                   stat == "weak-h1-total-all" || stat == "weak-height-total-all") {
            long min_n = (stat == "strong-height-total-all") ? 1 : 2;
            if (n >= min_n) {
                Int v;
                if (stat == "strong-h1-total-all")
                    v = thm1iii_strong_h1_total_all(n, tables);
                else if (stat == "strong-height-total-all")
                    v = thm2ii_strong_height_total_all(n, tables);
                else if (stat == "weak-h1-total-all")
                    v = thm3iii_weak_h1_total_all(n, tables);
                else
                    v = thm3v_weak_height_total_all(n, tables);
                add_row(rows, stat, n, -1, -1, v, "closedform");
            } else {
                // below the formula's validity range: answer from the oracle
                StatBundle b = oracle_stats_all(static_cast<int>(n), cfg.cap);
                Int v;
                if (stat == "strong-h1-total-all") v = b.strong_h1_total();
                else if (stat == "strong-height-total-all") v = b.strong_total_height;
                else if (stat == "weak-h1-total-all") v = b.weak_h1_total();
                else v = b.weak_total_height;
                add_row(rows, stat, n, -1, -1, v, "oracle");
            }
        } else {
            for (long k : ks_for(n)) {
                if (stat == "stirling2") {
                    add_row(rows, stat, n, k, -1, tables.stirling2(n, k), "closedform");
                } else if (stat == "stirling1") {
                    add_row(rows, stat, n, k, -1, tables.stirling1_signed(n, k),
                            "closedform");
                } else if (stat == "strong-h1-count") {
                    for (long r : rs_for(n, k))
                        add_row(rows, stat, n, k, r,
                                thm1i_strong_h1_count(n, k, r, tables), "closedform");
                } else if (stat == "weak-h1-count") {
                    for (long r : rs_for(n, k))
                        add_row(rows, stat, n, k, r,
                                thm3i_weak_h1_count(n, k, r, tables), "closedform");
                } else if (stat == "strong-h1-total") {
                    if (n >= 2) {
                        add_row(rows, stat, n, k, -1,
                                thm1ii_strong_h1_total(n, k, tables), "closedform");
                    } else {
                        StatBundle b =
                            oracle_stats(static_cast<int>(n), static_cast<int>(k), cfg.cap);
                        add_row(rows, stat, n, k, -1, b.strong_h1_total(), "oracle");
                    }
                } else if (stat == "weak-h1-total") {
                    add_row(rows, stat, n, k, -1, thm3ii_weak_h1_total(n, k, tables),
                            "closedform");
                } else if (stat == "weak-h1-total-series") {
                    add_row(rows, stat, n, k, -1,
                            weak_h1_total_exact(static_cast<int>(n),
                                                static_cast<int>(k), tables),
                            "series");
                } else if (stat == "strong-height-total") {
                    add_row(rows, stat, n, k, -1,
                            thm2i_strong_height_total(n, k, tables), "closedform");
                } else if (stat == "weak-height-total") {
                    add_row(rows, stat, n, k, -1,
                            thm3iv_weak_height_total(n, k, tables), "closedform");
                } else if (stat == "max-height-atmost") {
                    for (long h : hs_for(k))
                        add_row(rows, stat, n, k, h,
                                thm2iii_max_height_at_most(n, k, h, tables),
                                "closedform");
                } else if (stat == "max-height-exact") {
                    for (long h : hs_for(k))
                        add_row(rows, stat, n, k, h,
                                thm2iii_max_height_exact(n, k, h, tables),
                                "closedform");
                } else {
                    throw UsageError("unknown stat: " + stat);
                }
            }
        }
    }
    emit_rows(rows, cfg.format);
    return 0;
}

int cmd_verify(int max_n, const std::string& stat, const std::string& format,
               int threads, int cap) {
    if (max_n > cap) throw UsageError("--max-n exceeds --cap");
    NumberTables tables;
    VerifyReport report = run_verify(max_n, tables, stat, threads, cap);
    auto status_name = [](VerifyRecord::Status s) {
        switch (s) {
            case VerifyRecord::Status::agree: return "agree";
            case VerifyRecord::Status::documented_mismatch: return "documented-mismatch";
            case VerifyRecord::Status::mismatch: return "mismatch";
        }
        return "?";
    };
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : report.records) {
            json obj;
            obj["stat"] = r.stat;
            obj["n"] = r.n;
            obj["k"] = r.k >= 0 ? json(r.k) : json(nullptr);
            obj["param"] = r.param >= 0 ? json(r.param) : json(nullptr);
            obj["oracle"] = r.oracle.get_str();
            obj["closedform"] = r.closedform.get_str();
            obj["series"] = r.series.get_str();
            obj["status"] = status_name(r.status);
            arr.push_back(obj);
        }
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << "stat,n,k,param,oracle,closedform,series,status\n";
        for (const auto& r : report.records) {
            std::cout << r.stat << ',' << r.n << ',';
            if (r.k >= 0) std::cout << r.k;
            std::cout << ',';
            if (r.param >= 0) std::cout << r.param;
            std::cout << ',' << r.oracle.get_str() << ',' << r.closedform.get_str()
                      << ',' << r.series.get_str() << ',' << status_name(r.status)
                      << "\n";
        }
    }
    std::cerr << "verify: " << report.agreements() << " agreements, "
              << report.documented_mismatches() << " documented mismatches, "
              << report.unexpected_mismatches() << " unexpected mismatches\n";
    return report.exit_code();
}

int cmd_asym(const std::string& stat_arg, const std::string& n_range,
             const std::string& format) {
    std::vector<long> ns = parse_values(n_range);
    for (long n : ns)
        if (n < 2) throw UsageError("asym requires n >= 2");
    std::vector<AsymStat> stats;
    if (stat_arg.empty() || stat_arg == "all") {
        stats = {AsymStat::strong_h1_all, AsymStat::strong_height_all,
                 AsymStat::weak_h1_all, AsymStat::weak_height_all};
    } else if (stat_arg == "strong-h1") {
        stats = {AsymStat::strong_h1_all};
    } else if (stat_arg == "strong-height") {
        stats = {AsymStat::strong_height_all};
    } else if (stat_arg == "weak-h1") {
        stats = {AsymStat::weak_h1_all};
    } else if (stat_arg == "weak-height") {
        stats = {AsymStat::weak_height_all};
    } else {
        throw UsageError("unknown asym stat: " + stat_arg);
    }
    NumberTables tables;
    long max_n = *std::max_element(ns.begin(), ns.end());
    tables.reserve(max_n + 2);

    struct ARow {
        std::string stat;
        AsymEstimate e;
    };
    std::vector<ARow> rows;
    for (AsymStat s : stats)
        for (long n : ns) rows.push_back({asym_stat_name(s), estimate(s, n, tables)});

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj;
            obj["stat"] = r.stat;
            obj["n"] = r.e.n;
            obj["xi"] = fmt_double(r.e.xi);
            obj["estimate"] = fmt_double(r.e.estimate);
            obj["exact_ratio"] = fmt_double(r.e.exact_ratio);
            obj["rel_err"] = fmt_double(r.e.rel_err);
            arr.push_back(obj);
        }
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << "stat,n,xi,estimate,exact_ratio,rel_err\n";
        for (const auto& r : rows)
            std::cout << r.stat << ',' << r.e.n << ',' << fmt_double(r.e.xi) << ','
                      << fmt_double(r.e.estimate) << ',' << fmt_double(r.e.exact_ratio)
                      << ',' << fmt_double(r.e.rel_err) << "\n";
    }
    return 0;
}

int cmd_enumerate(int n, int k, int cap) {
    if (n > cap) throw UsageError("--n exceeds --cap");
    auto print = [](const Rgf& r) {
        std::cout << format_word(r.word, r.k) << "\n";
    };
    if (k < 0)
        enumerate_all(n, print);
    else
        enumerate(n, k, print);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"record-height statistics of set partitions in RGF form"};
    app.require_subcommand(1);

    TableConfig tcfg;
    auto* table = app.add_subcommand("table", "emit statistic tables");
    // long-only help so the --h height filter below does not clash with -h
    table->set_help_flag("--help", "print help");
    table->add_option("--stat", tcfg.stat, "statistic id")->required();
    table->add_option("--n", tcfg.n_range, "n range, e.g. 2..4 or 4,8")->required();
    table->add_option("--k", tcfg.k_range, "k range (default 1..n)");
    table->add_option("--r", tcfg.r_range, "r filter");
    table->add_option("--h", tcfg.h_range, "h filter");
    table->add_option("--format", tcfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--cap", tcfg.cap, "enumeration cap");
    table->add_option("--threads", tcfg.threads, "worker count");

    int v_max_n = 8, v_threads = 1, v_cap = kDefaultOracleCap;
    std::string v_stat, v_format = "csv";
    auto* verify = app.add_subcommand("verify", "three-way cross-verification");
    verify->add_option("--max-n", v_max_n, "verify all 1 <= k <= n <= max-n");
    verify->add_option("--stat", v_stat, "restrict to one formula (thm1i..thm3v)");
    verify->add_option("--format", v_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--threads", v_threads, "worker count");
    verify->add_option("--cap", v_cap, "enumeration cap");

    std::string a_stat, a_n, a_format = "csv";
    auto* asym = app.add_subcommand("asym", "asymptotic estimate report");
    asym->add_option("--stat", a_stat,
                     "strong-h1|strong-height|weak-h1|weak-height|all");
    asym->add_option("--n", a_n, "n values, e.g. 50,100,200,400")->required();
    asym->add_option("--format", a_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    int e_n = 0, e_k = -1, e_cap = kDefaultOracleCap;
    auto* enumc = app.add_subcommand("enumerate", "list RGFs one per line");
    enumc->add_option("--n", e_n, "word length")->required();
    enumc->add_option("--k", e_k, "block count (default: all)");
    enumc->add_option("--cap", e_cap, "enumeration cap");

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table(tcfg);
        if (verify->parsed())
            return cmd_verify(v_max_n, v_stat, v_format, v_threads, v_cap);
        if (asym->parsed()) return cmd_asym(a_stat, a_n, a_format);
        if (enumc->parsed()) return cmd_enumerate(e_n, e_k, e_cap);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
