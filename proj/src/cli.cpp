#include "polyhole/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "polyhole/bounds.hpp"
#include "polyhole/construct.hpp"
#include "polyhole/enumerate.hpp"
#include "polyhole/io.hpp"
#include "polyhole/transform.hpp"

namespace polyhole {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

ordered_json cell_json(const Cell& c) { return ordered_json::array({c.x, c.y}); }

ordered_json trace_json(const DismantleTrace& t) {
    ordered_json j;
    std::vector<std::string> rows;
    std::istringstream grid(render_ascii(t.start));
    for (std::string line; std::getline(grid, line);) rows.push_back(line);
    TopologySummary s = summarize(t.start);
    j["start"] = {{"n", s.n}, {"h", s.h}, {"grid", rows}};
    ordered_json moves = ordered_json::array(), steps = ordered_json::array();
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const auto& st = t.steps[i];
        ordered_json sm = ordered_json::array();
        for (const Move& mv : st.moves) {
            ordered_json m;
            m["step"] = i;
            switch (mv.kind) {
                case Move::move_tile:
                    m["op"] = "move";
                    m["from"] = cell_json(mv.from);
                    m["to"] = cell_json(mv.to);
                    break;
                case Move::remove_tile:
                    m["op"] = "remove";
                    m["cell"] = cell_json(mv.from);
                    break;
                case Move::add_tile:
                    m["op"] = "add";
                    m["cell"] = cell_json(mv.from);
                    break;
            }
            moves.push_back(m);
            sm.push_back(m);
        }
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(st.hash));
        steps.push_back({{"rule", st.rule}, {"n", st.n}, {"h", st.h}, {"hash", hash}});
    }
    j["moves"] = moves;
    j["steps"] = steps;
    return j;
}

Polyomino family(const std::string& name, int k) {
    if (name == "s1") return s1(k);
    if (name == "s2") return s2(k);
    if (name == "s0") return s0(k);
    if (name == "r0") return r0(k);
    if (name == "r1") return r1(k);
    if (name == "r2") return r2(k);
    if (name == "kr") return kr(k);
    throw UsageError("unknown family " + name);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polyominoes with many holes: constructions, verification, enumeration"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));

    std::string fmt = "ascii", out_path, palette_path;
    bool dual = false, hole_graph_overlay = false;
    auto add_render_opts = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
        sub->add_flag("--dual", dual, "Overlay the dual graph (svg)");
        sub->add_flag("--hole-graph", hole_graph_overlay, "Overlay the hole graph (svg)");
        sub->add_option("--palette", palette_path, "key=value palette file (svg)");
        sub->add_option("-o,--output", out_path, "Output file (default stdout)");
    };

    auto* gen = app.add_subcommand("gen", "Generate a construction or a g(h) witness");
    std::string fam;
    int k = -1;
    int64_t gen_holes = 0;
    auto* fam_opt = gen->add_option("--family", fam, "s1|s2|s0|r0|r1|r2|kr")
                        ->check(CLI::IsMember({"s1", "s2", "s0", "r0", "r1", "r2", "kr"}));
    auto* k_opt = gen->add_option("--k", k, "Family index (l for kr)");
    auto* holes_opt = gen->add_option("--holes", gen_holes, "Build a crystallized witness with h holes")
                          ->check(CLI::PositiveNumber);
    fam_opt->needs(k_opt);
    k_opt->needs(fam_opt);
    holes_opt->excludes(fam_opt);
    add_render_opts(gen);

    auto* ver = app.add_subcommand("verify", "Check whether a grid file is crystallized");
    std::string file;
    ver->add_option("file", file, "Text grid file")->required();

    auto* tab = app.add_subcommand("table", "Print the g(h) table as JSON");
    int64_t from = 1, to = 113;
    tab->add_option("--from", from)->required()->check(CLI::PositiveNumber);
    tab->add_option("--to", to)->required()->check(CLI::PositiveNumber);

    auto* en = app.add_subcommand("enum", "Census of free polyominoes by tiles and holes");
    int max_n = 0;
    bool deep = false;
    std::string json_path;
    en->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 20));
    en->add_flag("--deep", deep, "Allow n > 14 (long run)");
    en->add_option("--json", json_path, "Write the census as JSON");

    auto* dis = app.add_subcommand("dismantle", "Dismantle a threshold crystal down to h holes");
    int64_t dis_holes = 0;
    std::string trace_path;
    dis->add_option("--holes", dis_holes)->required()->check(CLI::PositiveNumber);
    dis->add_option("--trace", trace_path, "Write the move trace as JSON");

    auto* ren = app.add_subcommand("render", "Render a grid file");
    ren->add_option("file", file, "Text grid file")->required();
    add_render_opts(ren);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    auto render_spec = [&]() {
        RenderSpec spec;
        spec.format = fmt == "svg" ? RenderSpec::svg : RenderSpec::ascii;
        spec.dual_overlay = dual;
        spec.hole_overlay = hole_graph_overlay;
        if (!palette_path.empty()) spec.palette = load_palette(read_file(palette_path));
        return spec;
    };

    try {
        if (*gen) {
            Polyomino p = [&] {
                if (!fam.empty()) return family(fam, k);
                if (gen_holes > 0) return witness(gen_holes).shape;
                throw UsageError("gen needs --family/--k or --holes");
            }();
            write_output(out_path, render(p, render_spec()), out);
            return 0;
        }
        if (*ver) {
            Polyomino p = [&] {
                try {
                    return parse_polyomino(read_file(file));
                } catch (const error& e) {
                    if (e.code() == errc::internal_inconsistency) throw;
                    throw UsageError(std::string("invalid grid: ") + e.what());
                }
            }();
            TopologySummary s = summarize(p);
            out << "n=" << s.n << " h=" << s.h << " b=" << s.b << " p=" << s.p << " p_o=" << s.p_o
                << " p_h=" << s.p_h << " dual_acyclic=" << (s.dual_acyclic ? "yes" : "no") << "\n";
            EfficiencyReport eff = is_efficiently_structured(p);
            std::string structure = "efficiently structured";
            if (!eff.efficient) {
                structure = "not efficiently structured:";
                for (size_t i = 0; i < eff.reasons.size(); ++i) structure += (i ? ", " : " ") + eff.reasons[i];
            }
            if (s.h < 1) {
                out << "not crystallized: no holes, " << structure << "\n";
                return 1;
            }
            GEntry e = g(s.h);
            if (s.n == e.g) {
                out << "crystallized, " << structure << "\n";
                return 0;
            }
            out << "not crystallized: n=" << s.n << " but g(" << s.h << ")=" << e.g << ", " << structure << "\n";
            return 1;
        }
        if (*tab) {
            if (from > to) throw UsageError("--from must not exceed --to");
            ordered_json arr = ordered_json::array();
            for (int64_t h = from; h <= to; ++h) {
                GEntry e = g(h);
                arr.push_back({{"h", e.h},
                               {"g", e.g},
                               {"alpha_kind", e.alpha.kind == AlphaType::square ? "square" : "pronic"},
                               {"alpha_N", e.alpha.N},
                               {"m", e.m},
                               {"exceptional", e.exceptional}});
            }
            out << arr.dump(2) << "\n";
            return 0;
        }
        if (*en) {
            if (max_n > 14 && !deep) throw UsageError("--max-n above 14 needs --deep");
            CensusOptions opt;
            opt.threads = threads;
            CensusTable t = census(max_n, opt);
            out << "n\th\tfree\n";
            for (auto& [key, v] : t.rows) out << key.first << "\t" << key.second << "\t" << v << "\n";
            out << "h\tmin_n\tcrystals\n";
            for (auto& [h, n] : t.min_n_for_h)
                if (h > 0) out << h << "\t" << n << "\t" << t.crystal_counts.at(h) << "\n";
            if (!json_path.empty()) {
                ordered_json j;
                j["max_n"] = t.max_n;
                j["rows"] = ordered_json::array();
                for (auto& [key, v] : t.rows) j["rows"].push_back({{"n", key.first}, {"h", key.second}, {"free_count", v}});
                j["min_n_for_h"] = ordered_json::object();
                j["crystal_counts"] = ordered_json::object();
                for (auto& [h, n] : t.min_n_for_h) {
                    j["min_n_for_h"][std::to_string(h)] = n;
                    j["crystal_counts"][std::to_string(h)] = t.crystal_counts.at(h);
                }
                write_output(json_path, j.dump(2) + "\n", out);
            }
            return 0;
        }
        if (*dis) {
            Witness w = witness(dis_holes);
            for (size_t i = 0; i < w.trace.steps.size(); ++i) {
                const auto& st = w.trace.steps[i];
                out << "step " << i + 1 << " (" << st.rule << "): n=" << st.n << " h=" << st.h << "\n";
            }
            TopologySummary s = summarize(w.shape);
            out << "result: n=" << s.n << " h=" << s.h << " g(h)=" << g(dis_holes).g << "\n";
            out << render_ascii(w.shape);
            if (!trace_path.empty()) write_output(trace_path, trace_json(w.trace).dump(2) + "\n", out);
            return 0;
        }
        if (*ren) {
            std::string text = read_file(file);
            auto v = parse_grid(text);
            RenderSpec spec = render_spec();
            if (auto* p = std::get_if<Polyomino>(&v)) write_output(out_path, render(*p, spec), out);
            else {
                const Arrangement& a = std::get<Arrangement>(v);
                write_output(out_path, spec.format == RenderSpec::svg ? render_svg(a, spec) : render_ascii(a), out);
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == errc::internal_inconsistency || e.code() == errc::no_step_found) return 3;
        if (e.code() == errc::bad_argument) return 2;
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace polyhole
