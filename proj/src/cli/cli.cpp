#include "tnc/cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "tnc/alignment/alignment.hpp"
#include "tnc/feasibility/feasibility.hpp"
#include "tnc/galois/embedding.hpp"
#include "tnc/netmodel/random_network.hpp"
#include "tnc/transform/pipeline.hpp"

namespace tnc::cli {

namespace {

using netmodel::Network;

std::string render(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

Json poly_matrix_json(const galois::PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json matrix_json(const galois::Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(*m.field(), m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json plan_json(const transform::TransformPlan& plan) {
    return Json{{"n", plan.n},
                {"field", field_to_json(*plan.field)},
                {"alpha", elem_to_json(*plan.field, plan.alpha)},
                {"d_max", plan.d_max}};
}

Json load_input(const RunConfig& cfg) {
    if (cfg.fixture) return load_fixture(*cfg.fixture);
    if (cfg.input.empty()) throw Error(Errc::InvalidArgument, "no input file");
    return read_file(cfg.input);
}

NetworkDoc network_doc(const Json& j) {
    if (is_transfer_doc(j)) throw Error(Errc::InvalidArgument, "this command needs a network file");
    return parse_network_doc(j);
}

const netmodel::LekAssignment& require_leks(const NetworkDoc& doc) {
    if (!doc.leks) throw Error(Errc::InvalidArgument, "the network file has no \"leks\"");
    return *doc.leks;
}

struct Normalized {
    netmodel::NormalizedNetwork norm;
    netmodel::LekAssignment leks;
};

Normalized normalized(const NetworkDoc& doc) {
    auto norm = netmodel::normalize_delays(doc.net);
    auto leks = netmodel::lift(doc.net, norm, require_leks(doc));
    return {std::move(norm), std::move(leks)};
}

netmodel::TransferResult transfer_of(const Normalized& n) {
    if (!n.leks.time_invariant()) throw Error(Errc::InvalidArgument, "transfer matrices need time-invariant kernels");
    return netmodel::transfer_matrix(n.norm.net, n.leks.fixed());
}

Json transfer_report(const netmodel::TransferResult& tr) {
    Json disp = Json::array();
    for (std::size_t r = 0; r < tr.M.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < tr.M.cols(); ++c) row.push_back(tr.M(r, c).to_string());
        disp.push_back(row);
    }
    return Json{{"command", "transfer"},
                {"field", field_to_json(*tr.field())},
                {"mu", tr.mu_sizes},
                {"nu", tr.nu_sizes},
                {"d_prime_min", tr.d_prime_min},
                {"d_prime_max", tr.d_prime_max},
                {"d_max", tr.d_max},
                {"raw", poly_matrix_json(tr.raw)},
                {"M", poly_matrix_json(tr.M)},
                {"M_display", disp}};
}

RunResult cmd_validate(const RunConfig& cfg) {
    const auto doc = network_doc(load_input(cfg));
    const auto order = netmodel::validate(doc.net);
    Json j{{"command", "validate"},
           {"valid", true},
           {"nodes", doc.net.nodes.size()},
           {"edges", doc.net.edges.size()},
           {"sources", doc.net.sources.size()},
           {"sinks", doc.net.sinks.size()},
           {"unit_delay", doc.net.unit_delay()},
           {"topological_order", order}};
    return {0, render(j, cfg.pretty), ""};
}

RunResult cmd_mincut(const RunConfig& cfg) {
    const auto doc = network_doc(load_input(cfg));
    Json rows = Json::array();
    for (std::size_t i = 0; i < doc.net.sources.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < doc.net.sinks.size(); ++j) row.push_back(netmodel::min_cut(doc.net, i, j));
        rows.push_back(row);
    }
    Json j{{"command", "mincut"}, {"rows", "sources"}, {"columns", "sinks"}, {"min_cut", rows}};
    return {0, render(j, cfg.pretty), ""};
}

RunResult cmd_transfer(const RunConfig& cfg) {
    const auto doc = network_doc(load_input(cfg));
    const auto n = normalized(doc);
    if (cfg.dump_normalized) {
        std::ofstream out(*cfg.dump_normalized, std::ios::binary);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write " + *cfg.dump_normalized);
        out << network_to_json(n.norm.net, doc.field, n.leks).dump(2) << "\n";
    }
    return {0, render(transfer_report(transfer_of(n)), cfg.pretty), ""};
}

RunResult cmd_simulate(const RunConfig& cfg) {
    const auto doc = network_doc(load_input(cfg));
    if (!doc.inputs) throw Error(Errc::InvalidArgument, "the network file has no \"inputs\"");
    const auto n = normalized(doc);
    const auto out = netmodel::simulate(n.norm.net, n.leks, doc.inputs->series, doc.inputs->t0, doc.inputs->steps);
    Json series = Json::array();
    for (const auto& sink : out) {
        Json s = Json::array();
        for (const auto& sym : sink) {
            Json v = Json::array();
            for (auto e : sym) v.push_back(elem_to_json(*doc.field, e));
            s.push_back(v);
        }
        series.push_back(s);
    }
    Json j{{"command", "simulate"}, {"t0", doc.inputs->t0}, {"steps", doc.inputs->steps}, {"outputs", series}};
    return {0, render(j, cfg.pretty), ""};
}

struct Analysed {
    netmodel::TransferResult tr;
    feasibility::Demands demands;
    std::vector<std::string> names;
};

Analysed analysed(const Json& j) {
    if (is_transfer_doc(j)) {
        auto doc = parse_transfer_doc(j);
        return {doc.fixture.transfer, doc.fixture.demands, doc.fixture.sink_names};
    }
    const auto doc = parse_network_doc(j);
    std::vector<std::string> names;
    for (const auto& s : doc.net.sinks) names.push_back(s.node);
    return {transfer_of(normalized(doc)), feasibility::demands_of(doc.net), names};
}

RunResult cmd_feasibility(const RunConfig& cfg) {
    const auto a = analysed(load_input(cfg));
    const auto rep = feasibility::analyze(a.tr, a.demands);
    Json sinks = Json::array();
    for (std::size_t k = 0; k < rep.sinks.size(); ++k)
        sinks.push_back(Json{{"name", a.names[k]},
                             {"det", rep.sinks[k].det.to_string()},
                             {"det_coeffs", poly_to_json(rep.sinks[k].det)},
                             {"invertible", rep.sinks[k].invertible}});
    Json viol = Json::array();
    for (const auto& v : rep.violations)
        viol.push_back(Json{{"source", v.source}, {"process", v.process}, {"sink", v.sink}});
    Json j{{"command", "feasibility"},
           {"d_max", a.tr.d_max},
           {"zero_interference", rep.zero_interference_ok},
           {"violations", viol},
           {"invertible", rep.invertible},
           {"sinks", sinks}};
    if (rep.f) {
        j["f"] = rep.f->f.to_string();
        j["f_coeffs"] = poly_to_json(rep.f->f);
        j["f_at_one"] = elem_to_json(*rep.f->f.field(), rep.f->f_at_one);
        j["unfixable"] = rep.f->divisible_by_d_minus_1;
    } else {
        j["f"] = nullptr;
    }
    j["feasible"] = rep.feasible();
    if (cfg.find_plan && rep.f) {
        try {
            const auto plan = feasibility::find_plan(rep.f->f, cfg.n_min, a.tr.d_max,
                                                     feasibility::SearchLimits{cfg.max_ext_degree, cfg.max_n});
            j["plan"] = plan_json(plan);
        } catch (const Error& e) {
            if (e.code() != Errc::Unfixable && e.code() != Errc::SearchExhausted) throw;
            j["plan"] = nullptr;
            j["plan_error"] = std::string(to_string(e.code()));
        }
    }
    return {rep.feasible() ? 0 : 1, render(j, cfg.pretty), ""};
}

transform::Series random_generations(const std::vector<std::size_t>& sizes, std::size_t n, const galois::Field& f,
                                     std::mt19937_64& rng) {
    transform::Series s(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        s[i].resize(n);
        for (auto& x : s[i]) {
            x.resize(sizes[i]);
            for (auto& e : x) e = Elem{rng() % f.order()};
        }
    }
    return s;
}

RunResult cmd_transform(const RunConfig& cfg) {
    const auto doc = network_doc(load_input(cfg));
    const auto nz = normalized(doc);
    const auto tr = transfer_of(nz);
    const auto demands = feasibility::demands_of(doc.net);

    transform::TransformPlan plan;
    if (cfg.n) {
        const auto base = tr.field();
        FieldRef F = base;
        if ((base->order() - 1) % *cfg.n != 0) {
            const auto a = galois::extension_degree_for_order(base->spec(), *cfg.n, cfg.max_ext_degree);
            if (a == 0) throw Error(Errc::NoSuchElement, "no extension holds an element of order " + std::to_string(*cfg.n));
            F = galois::Field::build(base->characteristic(), base->degree() * a);
        }
        plan = transform::make_plan(F, *cfg.n, tr.d_max);
    } else {
        const auto rep = feasibility::analyze(tr, demands);
        if (!rep.f) {
            Json j{{"command", "transform"}, {"plan", nullptr}, {"reason", "some sink determinant is zero"}};
            return {1, render(j, cfg.pretty), ""};
        }
        try {
            plan = feasibility::find_plan(rep.f->f, std::max<std::size_t>(cfg.n_min, 1), tr.d_max,
                                          feasibility::SearchLimits{cfg.max_ext_degree, cfg.max_n});
        } catch (const Error& e) {
            if (e.code() != Errc::Unfixable && e.code() != Errc::SearchExhausted) throw;
            Json j{{"command", "transform"}, {"plan", nullptr}, {"reason", std::string(to_string(e.code()))}};
            return {1, render(j, cfg.pretty), ""};
        }
    }

    std::mt19937_64 rng(cfg.seed);
    const auto inputs = random_generations(tr.mu_sizes, plan.n, *plan.field, rng);
    const transform::NetworkChannel channel(nz.norm.net, nz.leks, tr.d_prime_min, 0, plan.field);
    const auto out = transform::run_block(plan, channel, inputs);
    const auto mhat = transform::eigen_blocks(tr.M, plan);
    const auto expect = transform::predict(mhat, tr.mu_sizes, tr.nu_sizes, inputs);

    std::string lines;
    Json head = plan_json(plan);
    head["command"] = "transform";
    head["seed"] = cfg.seed;
    head["channel_uses"] = plan.n + static_cast<std::size_t>(plan.d_max);
    lines += render(head, cfg.pretty);
    bool all_match = true, all_solvable = true;
    for (std::size_t t = 0; t < plan.n; ++t) {
        bool match = true;
        for (std::size_t j = 0; j < out.size(); ++j) match = match && out[j][t] == expect[j][t];
        Json sinks = Json::array();
        for (std::size_t j = 0; j < demands.size(); ++j) {
            std::vector<std::size_t> cols;
            for (auto [i, p] : demands[j]) cols.push_back(tr.source_offset(i) + p);
            const auto rows = mhat[t].block(tr.sink_offset(j), 0, tr.nu_sizes[j], tr.M.cols());
            bool ok = cols.size() == rows.rows() && rows.select_columns(cols).det().v != 0;
            for (std::size_t i = 0; i < tr.mu_sizes.size() && ok; ++i)
                for (std::size_t p = 0; p < tr.mu_sizes[i]; ++p)
                    if (std::find(demands[j].begin(), demands[j].end(), netmodel::Demand{i, p}) == demands[j].end() &&
                        !rows.column_is_zero(tr.source_offset(i) + p))
                        ok = false;
            sinks.push_back(ok);
            all_solvable = all_solvable && ok;
        }
        all_match = all_match && match;
        lines += render(Json{{"t", t}, {"matches_prediction", match}, {"sinks_solvable", sinks}}, cfg.pretty);
    }
    lines += render(Json{{"summary", Json{{"generations", plan.n}, {"all_match", all_match}, {"all_solvable", all_solvable}}}},
                    cfg.pretty);
    return {all_match && all_solvable ? 0 : 1, lines, ""};
}

Json align_report(const alignment::AlignmentInstance& inst, const alignment::AlignmentReport& rep,
                  std::size_t trials, std::uint64_t seed) {
    Json conds = Json::array(), ranks = Json::array(), ids = Json::array();
    for (const auto& c : rep.conditions) {
        conds.push_back(Json{{"name", c.name}, {"rank", c.rank}, {"required", c.required}, {"ok", c.ok}});
        ranks.push_back(c.rank);
    }
    for (const auto& i : rep.identities) ids.push_back(Json{{"name", i.name}, {"holds", i.holds}});
    Json j{{"command", "align"},
           {"category", alignment::to_string(inst.category)},
           {"pairs", Json::array({inst.perm[0] + 1, inst.perm[1] + 1, inst.perm[2] + 1})},
           {"n", inst.n},
           {"N", inst.N},
           {"field", field_to_json(*inst.plan.field)},
           {"alpha", elem_to_json(*inst.plan.field, inst.plan.alpha)},
           {"d_max", inst.plan.d_max},
           {"ranks", ranks},
           {"conditions", conds},
           {"identities", ids},
           {"feasible", rep.feasible}};
    if (!inst.singular.empty()) j["zero_eigenvalues"] = inst.singular;
    if (rep.feasible) {
        const auto counts = alignment::symbol_counts(inst);
        const auto tp = alignment::throughputs(inst);
        Json table = Json::array();
        for (std::size_t c = 0; c < 3; ++c)
            table.push_back(Json{{"pair", inst.perm[c] + 1}, {"symbols", counts[c]}, {"throughput", Json::array({tp[c].num, tp[c].den})}});
        j["throughput"] = table;
        j["channel_uses"] = inst.N + static_cast<std::size_t>(inst.plan.d_max);
        j["V1"] = matrix_json(inst.V1);
        j["V2"] = matrix_json(inst.V2);
        j["V3"] = matrix_json(inst.V3);
        std::mt19937_64 rng(seed);
        bool exact = true;
        for (std::size_t k = 0; k < trials; ++k) {
            std::array<std::vector<Elem>, 3> x;
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t s = 0; s < counts[c]; ++s) x[c].push_back(Elem{rng() % inst.plan.field->order()});
            exact = exact && alignment::encode_decode(inst, x).symbols == x;
        }
        j["decode_trials"] = trials;
        j["decode_exact"] = exact;
        j["feasible"] = exact;
    }
    return j;
}

RunResult cmd_align(const RunConfig& cfg) {
    const auto doc = network_doc(load_input(cfg));
    const std::size_t n = cfg.n.value_or(doc.n.value_or(3));
    if (cfg.verify_only) {
        const auto& leks = require_leks(doc);
        const auto inst = alignment::build_instance(doc.net, leks, n, cfg.seed);
        const auto rep = alignment::check_alignment(inst);
        Json j = align_report(inst, rep, cfg.trials, cfg.seed);
        j["mode"] = "verify";
        return {j["feasible"].get<bool>() ? 0 : 1, render(j, cfg.pretty), ""};
    }
    if (!doc.field) throw Error(Errc::InvalidArgument, "search needs a \"field\"");
    try {
        const auto found = alignment::align_search(doc.net, n, doc.field, cfg.seed, cfg.budget);
        Json j = align_report(found.instance, found.report, cfg.trials, cfg.seed);
        j["mode"] = "search";
        j["seed"] = cfg.seed;
        j["attempts"] = found.attempts;
        j["kernel_field"] = field_to_json(*found.leks.field());
        j["leks"] = leks_to_json(doc.net, found.leks);
        return {j["feasible"].get<bool>() ? 0 : 1, render(j, cfg.pretty), ""};
    } catch (const Error& e) {
        if (e.code() != Errc::NotFound) throw;
        Json j{{"command", "align"}, {"mode", "search"},  {"found", false},
               {"seed", cfg.seed},   {"budget", cfg.budget}, {"message", e.what()}};
        return {1, render(j, cfg.pretty), e.what()};
    }
}

}  // namespace

Json load_fixture(const std::string& name) {
    if (name == "example1") {
        Json j = transfer_doc_to_json(fixtures::example1());
        return Json{{"name", "example1"}, {"field", j["field"]}, {"transfer", j["transfer"]}};
    }
    if (name == "example2") {
        const auto F = fixtures::example2_field();
        const auto net = fixtures::example2_network();
        const auto v = fixtures::example2_witness();
        Json body = network_to_json(net, F, netmodel::LekAssignment(fixtures::example2_kernels(F, v)));
        // symbolic names of the non-trivial kernels
        auto name_of = [](const Json& from, const Json& to) -> const char* {
            const auto ft = from["tail"].get<std::string>(), th = to["head"].get<std::string>();
            const auto tt = to["tail"].get<std::string>();
            if (tt == "v1") return ft == "S1" ? "a" : ft == "S2" ? "b" : "c";
            if (tt == "v4") return th == "D1" ? "p" : th == "D2" ? "t" : "r";
            if (ft == "S1" && tt == "h1") return "u";
            if (ft == "S2" && tt == "h2") return "s";
            if (ft == "S3" && tt == "h3") return "q";
            return nullptr;
        };
        for (auto& b : body["leks"]["beta"])
            if (const char* s = name_of(b["from"], b["to"])) b["name"] = s;
        Json j{{"name", "example2"}};
        for (auto& [k, val] : body.items()) j[k] = val;
        j["alignment"] = Json{{"n", fixtures::example2_half_block}};
        return j;
    }
    throw Error(Errc::UnknownFixture, "no bundled fixture named \"" + name + "\"");
}

RunResult run(const RunConfig& cfg) {
    try {
        if (cfg.subcommand == "validate") return cmd_validate(cfg);
        if (cfg.subcommand == "mincut") return cmd_mincut(cfg);
        if (cfg.subcommand == "transfer") return cmd_transfer(cfg);
        if (cfg.subcommand == "simulate") return cmd_simulate(cfg);
        if (cfg.subcommand == "feasibility") return cmd_feasibility(cfg);
        if (cfg.subcommand == "transform") return cmd_transform(cfg);
        if (cfg.subcommand == "align") return cmd_align(cfg);
        throw Error(Errc::InvalidArgument, "unknown subcommand \"" + cfg.subcommand + "\"");
    } catch (const SchemaViolations& e) {
        Json j{{"error", "SchemaError"}, {"violations", e.violations()}};
        return {2, render(j, cfg.pretty), e.what()};
    } catch (const Error& e) {
        Json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        return {2, render(j, cfg.pretty), e.what()};
    }
}

int main_entry(int argc, char** argv) {
    CLI::App app{"Transform-domain network coding and three-unicast alignment"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::optional<std::string> output;
    std::optional<std::uint64_t> random_net;

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {{"validate", "check a network file"},
                          {"mincut", "min-cut between every source and sink"},
                          {"transfer", "transfer matrix of a network with kernels"},
                          {"simulate", "time-domain run of a network on the file's inputs"},
                          {"feasibility", "zero-interference, invertibility and f(D)"},
                          {"transform", "transform plan and per-generation pipeline check"},
                          {"align", "three-unicast alignment: search or verify"}};
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("input", cfg.input, "network or transfer JSON file");
        sub->add_option("--fixture", cfg.fixture, "use a bundled fixture (example1, example2)");
        sub->add_option("--random-net", random_net, "use a random network with random kernels from this seed");
        sub->add_option("--seed", cfg.seed, "seed for every random choice");
        sub->add_option("--n", cfg.n, "block length (transform) or half block (align)");
        sub->add_option("--budget", cfg.budget, "alignment search attempts");
        sub->add_option("--max-ext-degree", cfg.max_ext_degree, "largest field extension degree to try");
        sub->add_option("--max-n", cfg.max_n, "largest block length to try");
        sub->add_option("--n-min", cfg.n_min, "smallest block length to try");
        sub->add_option("--trials", cfg.trials, "random decode trials for align");
        sub->add_flag("--find-plan", cfg.find_plan, "search for a transform plan");
        sub->add_flag("--verify-only", cfg.verify_only, "use the file's kernels instead of searching");
        sub->add_option("--dump-normalized", cfg.dump_normalized, "write the unit-delay network here");
        sub->add_flag("--pretty", cfg.pretty, "indented JSON");
        sub->add_flag("--json", "compact JSON (default)");
        sub->add_option("-o,--output", output, "write the report here instead of stdout");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    RunResult res;
    if (random_net) {
        try {
            const auto net = netmodel::random_network(netmodel::RandomNetworkParams{}, *random_net);
            const auto F = galois::Field::build(2, 4);
            const auto path = std::filesystem::temp_directory_path() / ("tnc-random-" + std::to_string(*random_net) + ".json");
            std::ofstream(path) << network_to_json(net, F, netmodel::random_leks(net, F, *random_net)).dump();
            cfg.input = path.string();
            cfg.fixture.reset();
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    res = run(cfg);
    if (output) {
        std::ofstream out(*output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << *output << "\n";
            return 2;
        }
        out << res.output;
    } else {
        std::cout << res.output;
    }
    if (!res.diagnostic.empty()) std::cerr << res.diagnostic << "\n";
    return res.exit_code;
}

}  // namespace tnc::cli
