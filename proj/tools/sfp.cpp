// Command-line front end. Talks to the engine exclusively through the C
// interface in sforest.h; everything here is argument plumbing, CSV/SVG
// rendering and a small worker pool for campaigns.
#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sforest.h"

namespace {

namespace fs = std::filesystem;

// shortest round-trip decimal rendering keeps every emitted file byte-stable
std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct SfpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(sf_status status, const std::string& context) {
    if (status != SF_OK) throw SfpError(context + ": " + sf_last_error());
}

std::vector<std::string> split(const std::string& s, char sep);

std::vector<int> parse_kinds(const std::string& kind) {
    std::vector<int> out;
    if (kind == "all") {
        for (int i = 0; i < sf_kind_count(); ++i) out.push_back(i);
        return out;
    }
    for (const std::string& name : split(kind, '/')) {
        int k = -1;
        check(sf_kind_parse(name.c_str(), &k), "bad --kind");
        out.push_back(k);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// grid syntax: comma-separated key=value pairs, slash-separated values,
// e.g. "n=10/15/25,k=2/3/4,p=0.5/1.0,alpha=1.6/2.0"
struct Grid {
    std::vector<int> n = {10, 15, 25};
    std::vector<int> k = {2, 3, 4};
    std::vector<double> p = {0.5, 1.0};
    std::vector<double> alpha = {1.6, 2.0};
};

Grid parse_grid(const std::string& text) {
    Grid g;
    if (text.empty()) return g;
    for (const std::string& part : split(text, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw SfpError("bad --grid entry: " + part);
        std::string key = part.substr(0, eq);
        std::vector<std::string> values = split(part.substr(eq + 1), '/');
        if (values.empty() || values[0].empty()) throw SfpError("empty --grid values: " + part);
        if (key == "n" || key == "k") {
            std::vector<int> vals;
            for (const auto& v : values) vals.push_back(std::stoi(v));
            (key == "n" ? g.n : g.k) = vals;
        } else if (key == "p" || key == "alpha") {
            std::vector<double> vals;
            for (const auto& v : values) vals.push_back(std::stod(v));
            (key == "p" ? g.p : g.alpha) = vals;
        } else {
            throw SfpError("unknown --grid key: " + key);
        }
    }
    return g;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const std::string& v : split(text, '/')) out.push_back(std::stoull(v));
    return out;
}

std::string instance_stem(int n, int k, double p, double alpha, std::uint64_t seed) {
    return "n" + std::to_string(n) + "_k" + std::to_string(k) + "_p" + fmt(p) + "_a" +
           fmt(alpha) + "_s" + std::to_string(seed);
}

struct InstanceHandle {
    sf_instance* ptr = nullptr;
    ~InstanceHandle() { sf_instance_free(ptr); }
};

void print_report(const std::string& instance, const sf_bound_report& r) {
    std::cout << "instance=" << instance << " kind=" << sf_kind_name(r.kind)
              << " status=" << sf_run_status_name(r.status);
    if (r.status != SF_RUN_BUILD_REFUSED) std::cout << " bound=" << fmt(r.bound);
    std::cout << " rounds=" << r.rounds << " cuts=" << r.cuts_added
              << " wall_time_s=" << fmt(r.wall_time_s);
    if (r.status == SF_RUN_BUILD_REFUSED) std::cout << " detail=\"" << r.detail << "\"";
    std::cout << "\n";
}

// ---- campaign ----

struct CampaignCell {
    std::string name;
    int n, k;
    double p, alpha;
    std::uint64_t seed;
    std::string path;
};

struct CampaignRow {
    const CampaignCell* cell;
    int kind;
    std::string status = "error";
    std::string bound;  // empty when no bound was produced
    int rounds = 0;
    int cuts = 0;
    double wall = 0.0;
};

int run_campaign(const Grid& grid, const std::vector<std::uint64_t>& seeds,
                 const std::vector<int>& kinds, const std::string& out_dir, double time_limit,
                 int rounds, int workers) {
    fs::create_directories(fs::path(out_dir) / "instances");
    std::vector<CampaignCell> cells;
    for (int n : grid.n) {
        for (int k : grid.k) {
            for (double p : grid.p) {
                for (double alpha : grid.alpha) {
                    if (static_cast<int>(std::ceil(p * n)) < 2 * k) {
                        std::cerr << "skip cell n=" << n << " k=" << k << " p=" << fmt(p)
                                  << " alpha=" << fmt(alpha)
                                  << ": fewer than two terminals per set\n";
                        continue;
                    }
                    for (std::uint64_t seed : seeds) {
                        CampaignCell cell{instance_stem(n, k, p, alpha, seed), n, k, p, alpha,
                                          seed, ""};
                        cell.path = (fs::path(out_dir) / "instances" / (cell.name + ".sfp"))
                                        .string();
                        InstanceHandle inst;
                        check(sf_instance_generate(n, k, p, alpha, seed, &inst.ptr),
                              "generate " + cell.name);
                        check(sf_instance_save(inst.ptr, cell.path.c_str()),
                              "save " + cell.path);
                        cells.push_back(std::move(cell));
                    }
                }
            }
        }
    }

    std::vector<CampaignRow> rows;
    for (const CampaignCell& cell : cells) {
        for (int kind : kinds) rows.push_back({&cell, kind});
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            CampaignRow& row = rows[i];
            InstanceHandle inst;
            if (sf_instance_load(row.cell->path.c_str(), &inst.ptr) != SF_OK) continue;
            sf_bound_report r;
            if (sf_solve_relaxation(inst.ptr, row.kind, time_limit, rounds, &r) != SF_OK) {
                continue;  // row keeps its error status, run continues
            }
            row.status = sf_run_status_name(r.status);
            if (r.status != SF_RUN_BUILD_REFUSED) row.bound = fmt(r.bound);
            row.rounds = r.rounds;
            row.cuts = r.cuts_added;
            row.wall = r.wall_time_s;
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(1, workers); ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    std::ofstream csv(fs::path(out_dir) / "campaign.csv");
    csv << "instance,n,k,p,alpha,seed,kind,status,bound,rounds,cuts,wall_time_s\n";
    for (const CampaignRow& row : rows) {
        const CampaignCell& c = *row.cell;
        csv << c.name << "," << c.n << "," << c.k << "," << fmt(c.p) << "," << fmt(c.alpha)
            << "," << c.seed << "," << sf_kind_name(row.kind) << "," << row.status << ","
            << row.bound << "," << row.rounds << "," << row.cuts << "," << fmt(row.wall)
            << "\n";
    }
    std::cout << "campaign: " << rows.size() << " rows over " << cells.size()
              << " instances -> " << (fs::path(out_dir) / "campaign.csv").string() << "\n";
    return 0;
}

// ---- report ----

struct CsvRow {
    std::string instance;
    int n = 0, k = 0;
    std::string kind;
    std::string status;
    bool has_bound = false;
    double bound = 0.0;
};

std::vector<CsvRow> read_campaign_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw SfpError("cannot read " + path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split(line, ',');
        if (f.size() != 12) throw SfpError("malformed row in " + path + ": " + line);
        CsvRow row;
        row.instance = f[0];
        row.n = std::stoi(f[1]);
        row.k = std::stoi(f[2]);
        row.kind = f[6];
        row.status = f[7];
        if (!f[8].empty()) {
            row.has_bound = true;
            row.bound = std::stod(f[8]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int kind_order(const std::string& name) {
    for (int i = 0; i < sf_kind_count(); ++i) {
        if (name == sf_kind_name(i)) return i;
    }
    return sf_kind_count();
}

struct Quartiles {
    double min, q1, median, q3, max;
};

Quartiles quartiles(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    auto at = [&](double q) {
        double pos = q * (static_cast<double>(v.size()) - 1.0);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = std::min(lo + 1, v.size() - 1);
        double frac = pos - static_cast<double>(lo);
        return v[lo] * (1.0 - frac) + v[hi] * frac;
    };
    return {v.front(), at(0.25), at(0.5), at(0.75), v.back()};
}

void write_box_svg(const std::string& path, const std::vector<std::string>& names,
                   const std::vector<Quartiles>& stats) {
    const double width = 120.0 + 80.0 * static_cast<double>(names.size());
    const double height = 360.0;
    const double top = 30.0, bottom = 320.0, left = 70.0;
    double lo = 1.0, hi = 1.0;
    for (const Quartiles& q : stats) {
        lo = std::min(lo, q.min);
        hi = std::max(hi, q.max);
    }
    if (hi - lo < 1e-9) hi = lo + 1.0;
    double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    auto ypix = [&](double v) { return bottom - (v - lo) / (hi - lo) * (bottom - top); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"10\" y=\"18\" font-size=\"13\">improvement factor over the plain cut "
           "bound</text>\n";
    for (int t = 0; t <= 4; ++t) {
        double v = lo + (hi - lo) * t / 4.0;
        double y = ypix(v);
        svg << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(width - 20.0) << "\" y2=\"" << fmt(y)
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"8\" y=\"" << fmt(y + 4.0) << "\" font-size=\"11\">" << fmt(v)
            << "</text>\n";
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
        const Quartiles& q = stats[i];
        double cx = left + 40.0 + 80.0 * static_cast<double>(i);
        svg << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(ypix(q.min)) << "\" x2=\""
            << fmt(cx) << "\" y2=\"" << fmt(ypix(q.max))
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg << "<rect x=\"" << fmt(cx - 20.0) << "\" y=\"" << fmt(ypix(q.q3)) << "\" width=\"40\" height=\""
            << fmt(std::max(1.0, ypix(q.q1) - ypix(q.q3)))
            << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << fmt(cx - 20.0) << "\" y1=\"" << fmt(ypix(q.median))
            << "\" x2=\"" << fmt(cx + 20.0) << "\" y2=\"" << fmt(ypix(q.median))
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(bottom + 18.0)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << names[i] << "</text>\n";
    }
    svg << "</svg>\n";
    std::ofstream out(path);
    out << svg.str();
}

int run_report(const std::string& out_dir) {
    std::vector<CsvRow> rows = read_campaign_csv((fs::path(out_dir) / "campaign.csv").string());

    // solved percentage per (n, k, kind)
    std::map<std::tuple<int, int, int>, std::pair<int, int>> solved;  // (opt, total)
    for (const CsvRow& row : rows) {
        auto& cell = solved[{row.n, row.k, kind_order(row.kind)}];
        ++cell.second;
        if (row.status == "optimal") ++cell.first;
    }
    {
        std::ofstream out(fs::path(out_dir) / "solved.csv");
        out << "n,k,kind,solved_pct,total\n";
        for (const auto& [key, cell] : solved) {
            out << std::get<0>(key) << "," << std::get<1>(key) << ","
                << sf_kind_name(std::get<2>(key)) << ","
                << fmt(100.0 * cell.first / cell.second) << "," << cell.second << "\n";
        }
    }

    // improvement factor of each kind over the plain cut bound, per instance;
    // only runs that reached the LP optimum enter, a truncated run's bound
    // says nothing about the relaxation's strength
    std::map<std::string, double> uc_bound;
    for (const CsvRow& row : rows) {
        if (row.kind == "uc" && row.status == "optimal" && row.has_bound) {
            uc_bound[row.instance] = row.bound;
        }
    }
    std::map<int, std::vector<double>> factors;
    for (const CsvRow& row : rows) {
        if (!row.has_bound || row.status != "optimal") continue;
        auto it = uc_bound.find(row.instance);
        if (it == uc_bound.end() || it->second <= 1e-12) continue;
        factors[kind_order(row.kind)].push_back(row.bound / it->second);
    }
    std::vector<std::string> names;
    std::vector<Quartiles> stats;
    {
        std::ofstream out(fs::path(out_dir) / "improvement.csv");
        out << "kind,count,min,q1,median,q3,max\n";
        for (const auto& [kind, vals] : factors) {
            Quartiles q = quartiles(vals);
            out << sf_kind_name(kind) << "," << vals.size() << "," << fmt(q.min) << ","
                << fmt(q.q1) << "," << fmt(q.median) << "," << fmt(q.q3) << "," << fmt(q.max)
                << "\n";
            names.push_back(sf_kind_name(kind));
            stats.push_back(q);
        }
    }
    write_box_svg((fs::path(out_dir) / "improvement.svg").string(), names, stats);
    std::cout << "report: wrote solved.csv, improvement.csv, improvement.svg in " << out_dir
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner Forest lower-bound toolkit"};
    app.require_subcommand(1);

    std::string instance_path, kind = "all", out_dir = ".", grid_text, seeds_text = "1/2";
    std::string export_lp_path;
    double time_limit = 0.0;
    int rounds = 0, workers = 4;

    CLI::App* gen = app.add_subcommand("gen", "generate instance files for a parameter grid");
    gen->add_option("--grid", grid_text, "n=../..,k=..,p=..,alpha=.. (values slash-separated)");
    gen->add_option("--seed", seeds_text, "slash-separated seed list");
    gen->add_option("--out", out_dir, "output directory");

    CLI::App* bound = app.add_subcommand("bound", "solve one relaxation");
    bound->add_option("--instance", instance_path, "instance file")->required();
    bound->add_option("--kind", kind, "relaxation kind, slash-separated list, or 'all'");
    bound->add_option("--time-limit", time_limit, "seconds per run");
    bound->add_option("--rounds", rounds, "cutting-plane round cap");
    bound->add_option("--export-lp", export_lp_path, "write the initial LP to this path");

    CLI::App* exact = app.add_subcommand("exact", "integer optimum");
    exact->add_option("--instance", instance_path, "instance file")->required();
    exact->add_option("--time-limit", time_limit, "seconds");

    CLI::App* cmp = app.add_subcommand("compare", "bounds plus dominance audit");
    cmp->add_option("--instance", instance_path, "instance file")->required();
    cmp->add_option("--kind", kind, "kinds to compare ('all'; a single kind is rejected)");
    cmp->add_option("--time-limit", time_limit, "seconds per run");
    cmp->add_option("--rounds", rounds, "cutting-plane round cap");

    CLI::App* campaign = app.add_subcommand("campaign", "grid of generated instances x kinds");
    campaign->add_option("--grid", grid_text, "n=..,k=..,p=..,alpha=.. (values slash-separated)");
    campaign->add_option("--seed", seeds_text, "slash-separated seed list");
    campaign->add_option("--kind", kind, "relaxation kind, slash-separated list, or 'all'");
    campaign->add_option("--time-limit", time_limit, "seconds per run");
    campaign->add_option("--rounds", rounds, "cutting-plane round cap");
    campaign->add_option("--out", out_dir, "output directory");
    campaign->add_option("--workers", workers, "parallel runs");

    CLI::App* report = app.add_subcommand("report", "aggregate a campaign CSV");
    report->add_option("--out", out_dir, "directory holding campaign.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            Grid g = parse_grid(grid_text);
            fs::create_directories(out_dir);
            int written = 0;
            for (int n : g.n) {
                for (int k : g.k) {
                    for (double p : g.p) {
                        for (double alpha : g.alpha) {
                            if (static_cast<int>(std::ceil(p * n)) < 2 * k) continue;
                            for (std::uint64_t s : parse_seeds(seeds_text)) {
                                InstanceHandle inst;
                                check(sf_instance_generate(n, k, p, alpha, s, &inst.ptr),
                                      "generate");
                                std::string path =
                                    (fs::path(out_dir) /
                                     (instance_stem(n, k, p, alpha, s) + ".sfp"))
                                        .string();
                                check(sf_instance_save(inst.ptr, path.c_str()), "save " + path);
                                ++written;
                            }
                        }
                    }
                }
            }
            std::cout << "gen: wrote " << written << " instances to " << out_dir << "\n";
            return 0;
        }
        if (bound->parsed()) {
            InstanceHandle inst;
            check(sf_instance_load(instance_path.c_str(), &inst.ptr), "load " + instance_path);
            for (int k : parse_kinds(kind)) {
                sf_bound_report r;
                check(sf_solve_relaxation(inst.ptr, k, time_limit, rounds, &r), "solve");
                print_report(instance_path, r);
                if (!export_lp_path.empty()) {
                    char* text = nullptr;
                    check(sf_export_lp(inst.ptr, k, &text), "export LP");
                    std::ofstream(export_lp_path) << text;
                    sf_string_free(text);
                }
            }
            return 0;
        }
        if (exact->parsed()) {
            InstanceHandle inst;
            check(sf_instance_load(instance_path.c_str(), &inst.ptr), "load " + instance_path);
            sf_exact_result r;
            check(sf_integer_optimum(inst.ptr, time_limit, &r), "exact");
            std::cout << "instance=" << instance_path << " found=" << r.found
                      << " optimal=" << r.optimal;
            if (r.found) std::cout << " value=" << fmt(r.value);
            std::cout << " nodes=" << r.nodes << "\n";
            return r.found ? 0 : 1;
        }
        if (cmp->parsed()) {
            InstanceHandle inst;
            check(sf_instance_load(instance_path.c_str(), &inst.ptr), "load " + instance_path);
            std::vector<int> kinds = parse_kinds(kind);
            std::vector<sf_bound_report> reports(kinds.size());
            std::vector<sf_dominance_check> audit(16);
            int audit_count = 0, all_passed = 0;
            check(sf_compare(inst.ptr, kinds.data(), static_cast<int>(kinds.size()), time_limit,
                             rounds, reports.data(), audit.data(),
                             static_cast<int>(audit.size()), &audit_count, &all_passed),
                  "compare");
            for (const sf_bound_report& r : reports) print_report(instance_path, r);
            for (int i = 0; i < audit_count; ++i) {
                const sf_dominance_check& c = audit[static_cast<std::size_t>(i)];
                std::cout << "audit " << sf_kind_name(c.weaker)
                          << (c.equality ? " = " : " <= ") << sf_kind_name(c.stronger)
                          << " applicable=" << c.applicable << " passed=" << c.passed;
                if (c.applicable) std::cout << " lhs=" << fmt(c.lhs) << " rhs=" << fmt(c.rhs);
                std::cout << "\n";
            }
            std::cout << "all_passed=" << all_passed << "\n";
            return all_passed ? 0 : 1;
        }
        if (campaign->parsed()) {
            return run_campaign(parse_grid(grid_text), parse_seeds(seeds_text),
                                parse_kinds(kind), out_dir, time_limit, rounds, workers);
        }
        if (report->parsed()) {
            return run_report(out_dir);
        }
    } catch (const SfpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
