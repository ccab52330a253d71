#include "cli.hpp"

#include "qfano/basket.hpp"
#include "qfano/filters.hpp"
#include "qfano/invariants.hpp"
#include "qfano/rational.hpp"
#include "qfano/search.hpp"
#include "qfano/wps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qfano::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { table, json, csv };

Format parse_format(const std::string& text) {
    if (text == "table") return Format::table;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + text + "' (expected table|json|csv)");
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

json basket_json(const Basket& B) {
    json arr = json::array();
    for (const auto& p : B.points()) arr.push_back(json{{"r", p.r}, {"b", p.b}});
    return arr;
}

json candidate_json(const FanoCandidate& c) {
    json dims = json::object();
    for (const auto& [t, d] : c.dims) dims[std::to_string(t)] = d;
    return json{{"q", c.q},
                {"basket", basket_json(c.basket)},
                {"degree", to_string(c.minus_k_cubed)},
                {"l_cubed", to_string(c.l_cubed)},
                {"kc2", to_string(c.kc2)},
                {"dims", std::move(dims)},
                {"antican_dim", c.antican_dim}};
}

std::string dim_label(int t, int q) {
    if (t == q) return "dim|-K|";
    if (t == 1) return "dim|L|";
    return "dim|" + std::to_string(t) + "L|";
}

void write_candidates(std::ostream& out, const std::vector<FanoCandidate>& rows, Format fmt) {
    switch (fmt) {
        case Format::json:
            for (const auto& c : rows) out << candidate_json(c).dump() << '\n';
            return;
        case Format::csv: {
            int max_q = 0;
            for (const auto& c : rows) max_q = std::max(max_q, c.q);
            out << "q,basket,degree,l_cubed,kc2";
            for (int t = 1; t <= max_q; ++t) out << ",dim" << t;
            out << ",antican_dim\n";
            for (const auto& c : rows) {
                out << c.q << ',' << csv_field(c.basket.str()) << ',' << to_string(c.minus_k_cubed)
                    << ',' << to_string(c.l_cubed) << ',' << to_string(c.kc2);
                for (int t = 1; t <= max_q; ++t) {
                    out << ',';
                    if (t <= c.q) out << c.dims.at(t);
                }
                out << ',' << c.antican_dim << '\n';
            }
            return;
        }
        case Format::table:
            for (const auto& c : rows) {
                out << "q=" << c.q << " B=(" << c.basket.str() << ") -K^3="
                    << to_string(c.minus_k_cubed) << " L^3=" << to_string(c.l_cubed)
                    << " -K.c2=" << to_string(c.kc2);
                for (const auto& [t, d] : c.dims) out << ' ' << dim_label(t, c.q) << '=' << d;
                out << '\n';
            }
            return;
    }
}

void write_wps(std::ostream& out, const std::vector<std::pair<WeightVector, WpsInvariants>>& rows,
               Format fmt) {
    switch (fmt) {
        case Format::json:
            for (const auto& [w, inv] : rows) {
                json rec{{"weights", w.a},
                         {"minus_k_cubed", to_string(inv.minus_k_cubed)},
                         {"index", inv.index},
                         {"antican_dim", inv.antican_dim}};
                out << rec.dump() << '\n';
            }
            return;
        case Format::csv:
            out << "a0,a1,a2,a3,minus_k_cubed,index,antican_dim\n";
            for (const auto& [w, inv] : rows)
                out << w.a[0] << ',' << w.a[1] << ',' << w.a[2] << ',' << w.a[3] << ','
                    << to_string(inv.minus_k_cubed) << ',' << inv.index << ',' << inv.antican_dim
                    << '\n';
            return;
        case Format::table:
            for (const auto& [w, inv] : rows)
                out << "P(" << w.str() << ") -K^3=" << to_string(inv.minus_k_cubed)
                    << " index=" << inv.index << " dim|-K|=" << inv.antican_dim << '\n';
            return;
    }
}

void write_report(std::ostream& out, const std::string& target, const ReproduceReport& report,
                  Format fmt) {
    switch (fmt) {
        case Format::json: {
            json sections = json::array();
            for (const auto& s : report.sections)
                sections.push_back(json{{"name", s.name},
                                        {"pass", s.pass},
                                        {"expected", s.expected},
                                        {"matched", s.matched},
                                        {"diffs", s.diffs}});
            out << json{{"target", target}, {"pass", report.pass}, {"sections", sections}}.dump()
                << '\n';
            return;
        }
        case Format::csv: {
            out << "section,pass,expected,matched,diffs\n";
            for (const auto& s : report.sections) {
                std::string diffs;
                for (const auto& d : s.diffs) {
                    if (!diffs.empty()) diffs += "; ";
                    diffs += d;
                }
                out << s.name << ',' << (s.pass ? "true" : "false") << ',' << s.expected << ','
                    << s.matched << ',' << csv_field(diffs) << '\n';
            }
            return;
        }
        case Format::table:
            for (const auto& s : report.sections) {
                out << (s.pass ? "PASS " : "FAIL ") << s.name << " (" << s.matched << '/'
                    << s.expected << " checks)\n";
                for (const auto& d : s.diffs) out << "  " << d << '\n';
            }
            out << (report.pass ? "PASS" : "FAIL") << '\n';
            return;
    }
}

struct RrRow {
    long long t;
    Rational chi;
    bool has_dim = false;
    int dim = 0;
};

void write_rr(std::ostream& out, const NumericalFano& F, const std::vector<RrRow>& rows,
              Format fmt) {
    switch (fmt) {
        case Format::json:
            for (const auto& r : rows) {
                json rec{{"q", F.q},
                         {"basket", basket_json(F.basket)},
                         {"t", r.t},
                         {"chi", to_string(r.chi)}};
                if (r.has_dim) rec["dim"] = r.dim;
                out << rec.dump() << '\n';
            }
            return;
        case Format::csv:
            out << "t,chi,dim\n";
            for (const auto& r : rows) {
                out << r.t << ',' << to_string(r.chi) << ',';
                if (r.has_dim) out << r.dim;
                out << '\n';
            }
            return;
        case Format::table:
            for (const auto& r : rows) {
                const std::string tl = r.t == 1 ? "L" : std::to_string(r.t) + "L";
                out << "chi(" << tl << ") = " << to_string(r.chi) << '\n';
                if (r.has_dim) out << "dim|" << tl << "| = " << r.dim << '\n';
            }
            return;
    }
}

std::optional<int> parse_q_bound(const std::string& flag, const std::string& text) {
    if (text == "auto") return std::nullopt;
    try {
        std::size_t pos = 0;
        const int v = std::stoi(text, &pos);
        if (pos != text.size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + flag + " '" + text +
                                    "' (expected positive integer or auto)");
    }
}

SearchMode parse_mode(const std::string& text) {
    if (text == "strict") return SearchMode::strict;
    if (text == "paper-slack") return SearchMode::paper_slack;
    throw std::invalid_argument("unknown mode '" + text + "' (expected strict|paper-slack)");
}

int run_rr(const std::string& basket_text, int q, const std::string& degree_text,
           std::vector<long long> ts, Format fmt, std::ostream& out) {
    const Basket B = Basket::parse(basket_text);
    Rational l3;
    if (!degree_text.empty()) {
        const Rational degree = parse_rational(degree_text);
        l3 = degree / (Int(q) * q * q);
    } else if (q >= 3) {
        l3 = l_cubed(B, q);
        if (l3 <= 0)
            throw std::domain_error("computed L^3 = " + to_string(l3) +
                                    " is not positive; no Fano candidate");
    } else {
        throw std::invalid_argument("--degree is required for q <= 2 (no L^3 formula applies)");
    }
    const NumericalFano F = NumericalFano::make(B, q, l3);
    if (ts.empty())
        for (long long t = 1; t <= q; ++t) ts.push_back(t);
    std::vector<RrRow> rows;
    for (const long long t : ts) {
        RrRow row{t, euler_characteristic(F, t)};
        if (t >= 1 && is_integer(row.chi) && row.chi >= 1) {
            row.has_dim = true;
            row.dim = static_cast<int>(num(row.chi)) - 1;
        }
        rows.push_back(std::move(row));
    }
    write_rr(out, F, rows, fmt);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic numerical classification of non-Gorenstein Q-Fano threefolds"};
    app.require_subcommand(1);

    std::string format_text = "table";
    std::string mode_text = "strict";
    int jobs = 1;

    // rr
    auto* rr = app.add_subcommand("rr", "Evaluate chi(tL) and dim|tL| for a basket and index");
    std::string rr_basket;
    int rr_q = 0;
    std::string rr_degree;
    std::vector<long long> rr_ts;
    rr->add_option("--basket", rr_basket, "Basket string, e.g. \"2:1,10:3\" (default empty)");
    rr->add_option("--q", rr_q, "Fano index q >= 1")->required()->check(CLI::PositiveNumber);
    rr->add_option("--t", rr_ts, "Twist t (repeatable; default 1..q)");
    rr->add_option("--degree", rr_degree,
                   "-K^3 as a rational; required for q <= 2, overrides the formula otherwise");
    rr->add_option("--format", format_text, "table|json|csv");

    // search
    auto* search = app.add_subcommand("search", "Exhaustive candidate search above a degree threshold");
    std::string min_degree_text = "125/2";
    std::string q_min_text = "auto";
    std::string q_max_text = "auto";
    std::string cap_text = "24";
    search->add_option("--min-degree", min_degree_text, "Degree threshold -K^3 >= d (default 125/2)");
    search->add_option("--q-min", q_min_text, "Smallest index to consider, or auto for 1");
    search->add_option("--q-max", q_max_text, "Largest index, or auto for the 4*lcm bound");
    search->add_option("--mode", mode_text, "strict|paper-slack (default strict)");
    search->add_option("--basket-sum-cap", cap_text, "Cap on sum(r - 1/r) (default 24)");
    search->add_option("--jobs", jobs, "Worker threads (default 1; never changes output)")
        ->check(CLI::PositiveNumber);
    search->add_option("--format", format_text, "table|json|csv");

    // torsion
    auto* torsion = app.add_subcommand("torsion", "Check the torsion obstruction for a basket");
    std::string torsion_basket;
    torsion->add_option("--basket", torsion_basket, "Basket string")->required();
    torsion->add_option("--format", format_text, "table|json|csv");

    // wps
    auto* wps = app.add_subcommand("wps", "Scan terminal weighted projective 3-spaces");
    int max_weight = 30;
    wps->add_option("--max-weight", max_weight, "Largest weight a3 (default 30)")
        ->check(CLI::PositiveNumber);
    wps->add_option("--format", format_text, "table|json|csv");

    // reproduce
    auto* reproduce = app.add_subcommand("reproduce", "Diff search output against the built-in reference tables");
    std::string target_text = "all";
    reproduce->add_option("target", target_text, "prop4|prop5|cor52|toric|all (default all)");
    reproduce->add_option("--mode", mode_text, "strict|paper-slack (default strict)");
    reproduce->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    reproduce->add_option("--format", format_text, "table|json|csv");

    std::vector<const char*> argv;
    argv.push_back("qfano");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);  // contextual help, exit 0
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        const Format fmt = parse_format(format_text);
        if (rr->parsed()) return run_rr(rr_basket, rr_q, rr_degree, rr_ts, fmt, out);

        if (search->parsed()) {
            SearchConfig cfg;
            cfg.min_degree = parse_rational(min_degree_text);
            cfg.q_min = parse_q_bound("--q-min", q_min_text).value_or(1);
            cfg.q_max = parse_q_bound("--q-max", q_max_text);
            cfg.mode = parse_mode(mode_text);
            cfg.jobs = jobs;
            cfg.basket_sum_cap = parse_rational(cap_text);
            cfg.validate();
            std::vector<FanoCandidate> rows;
            if (cfg.q_min <= 2) {
                for (auto& c : classify_low(cfg)) rows.push_back(std::move(c));
            }
            if (!cfg.q_max || *cfg.q_max >= 3) {
                for (auto& c : classify_high(cfg)) rows.push_back(std::move(c));
            }
            std::sort(rows.begin(), rows.end(), candidate_order);
            write_candidates(out, rows, fmt);
            return 0;
        }

        if (torsion->parsed()) {
            const Basket B = Basket::parse(torsion_basket);
            const bool feasible = torsion_feasible(B);
            switch (fmt) {
                case Format::json:
                    out << json{{"basket", basket_json(B)}, {"torsion_feasible", feasible}}.dump()
                        << '\n';
                    break;
                case Format::csv:
                    out << "basket,torsion_feasible\n"
                        << csv_field(B.str()) << ',' << (feasible ? "true" : "false") << '\n';
                    break;
                case Format::table:
                    out << "torsion_feasible = " << (feasible ? "true" : "false")
                        << (feasible ? "" : " (Cl is torsion-free for this basket)") << '\n';
                    break;
            }
            return 0;
        }

        if (wps->parsed()) {
            write_wps(out, scan_wps(max_weight), fmt);
            return 0;
        }

        if (reproduce->parsed()) {
            ReproduceTarget target;
            if (target_text == "prop4") target = ReproduceTarget::prop4;
            else if (target_text == "prop5") target = ReproduceTarget::prop5;
            else if (target_text == "cor52") target = ReproduceTarget::cor52;
            else if (target_text == "toric") target = ReproduceTarget::toric;
            else if (target_text == "all") target = ReproduceTarget::all;
            else throw std::invalid_argument("unknown reproduce target '" + target_text + "'");
            SearchConfig cfg;
            cfg.mode = parse_mode(mode_text);
            cfg.jobs = jobs;
            const ReproduceReport report = reproduce_check(target, cfg);
            write_report(out, target_text, report, fmt);
            return report.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace qfano::cli
