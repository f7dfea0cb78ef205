#include "tnc/cli/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace tnc::cli {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
    return s;
}

// Collects violations while walking a document.
class Checker {
public:
    void fail(const std::string& path, const std::string& msg) { errors_.push_back(path + ": " + msg); }
    bool ok() const { return errors_.empty(); }
    void raise() const {
        if (!errors_.empty()) throw SchemaViolations(errors_);
    }

    const Json* member(const Json& j, const std::string& path, const char* key, bool required) {
        if (!j.is_object()) return nullptr;
        if (!j.contains(key)) {
            if (required) fail(path, std::string("missing \"") + key + "\"");
            return nullptr;
        }
        return &j.at(key);
    }

    std::optional<std::int64_t> integer(const Json* j, const std::string& path, std::int64_t lo, std::int64_t hi) {
        if (!j) return std::nullopt;
        if (!j->is_number_integer()) {
            fail(path, "expected an integer");
            return std::nullopt;
        }
        const auto v = j->get<std::int64_t>();
        if (v < lo || v > hi) {
            fail(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            return std::nullopt;
        }
        return v;
    }

    std::optional<std::string> string(const Json* j, const std::string& path) {
        if (!j) return std::nullopt;
        if (!j->is_string()) {
            fail(path, "expected a string");
            return std::nullopt;
        }
        return j->get<std::string>();
    }

    bool array(const Json* j, const std::string& path) {
        if (!j) return false;
        if (!j->is_array()) {
            fail(path, "expected an array");
            return false;
        }
        return true;
    }

    bool object(const Json* j, const std::string& path) {
        if (!j) return false;
        if (!j->is_object()) {
            fail(path, "expected an object");
            return false;
        }
        return true;
    }

    std::optional<Elem> elem(const Json* j, const std::string& path, const galois::Field* f) {
        if (!array(j, path) || !f) return std::nullopt;
        if (j->size() > f->degree()) {
            fail(path, "element has more than " + std::to_string(f->degree()) + " coefficients");
            return std::nullopt;
        }
        std::vector<std::uint32_t> c;
        bool good = true;
        for (std::size_t k = 0; k < j->size(); ++k) {
            const auto v = integer(&(*j)[k], path + "/" + std::to_string(k), 0, f->characteristic() - 1);
            good = good && v.has_value();
            c.push_back(v ? static_cast<std::uint32_t>(*v) : 0);
        }
        if (!good) return std::nullopt;
        return f->from_coeffs(c);
    }

    std::optional<galois::Poly> poly(const Json* j, const std::string& path, const FieldRef& f) {
        if (!array(j, path) || !f) return std::nullopt;
        std::vector<Elem> c;
        bool good = true;
        for (std::size_t k = 0; k < j->size(); ++k) {
            const auto e = elem(&(*j)[k], path + "/" + std::to_string(k), f.get());
            good = good && e.has_value();
            c.push_back(e.value_or(Elem{}));
        }
        if (!good) return std::nullopt;
        return galois::Poly(f, std::move(c));
    }

    FieldRef field(const Json* j, const std::string& path) {
        if (!object(j, path)) return nullptr;
        const auto p = integer(member(*j, path, "p", true), path + "/p", 2, 1 << 20);
        const auto m = integer(member(*j, path, "m", true), path + "/m", 1, 32);
        std::optional<std::vector<std::uint32_t>> modulus;
        if (const Json* mj = member(*j, path, "modulus", false); array(mj, path + "/modulus")) {
            modulus.emplace();
            for (std::size_t k = 0; k < mj->size(); ++k) {
                const auto c = integer(&(*mj)[k], path + "/modulus/" + std::to_string(k), 0, p ? *p - 1 : 1 << 20);
                modulus->push_back(c ? static_cast<std::uint32_t>(*c) : 0);
            }
        }
        if (!p || !m) return nullptr;
        try {
            return galois::Field::build(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*m), modulus);
        } catch (const Error& e) {
            fail(path, e.what());
            return nullptr;
        }
    }

private:
    std::vector<std::string> errors_;
};

std::string ptr(const std::string& base, std::size_t k) { return base + "/" + std::to_string(k); }

struct EdgeKey {
    std::string tail, head;
    std::uint32_t index = 0;
    auto operator<=>(const EdgeKey&) const = default;
};

std::optional<std::size_t> edge_ref(Checker& c, const Json* j, const std::string& path,
                                    const std::map<EdgeKey, std::size_t>& edges) {
    if (!c.object(j, path)) return std::nullopt;
    const auto tail = c.string(c.member(*j, path, "tail", true), path + "/tail");
    const auto head = c.string(c.member(*j, path, "head", true), path + "/head");
    const auto index = c.member(*j, path, "index", false)
                           ? c.integer(&j->at("index"), path + "/index", 0, UINT32_MAX)
                           : std::optional<std::int64_t>(0);
    if (!tail || !head || !index) return std::nullopt;
    const auto it = edges.find({*tail, *head, static_cast<std::uint32_t>(*index)});
    if (it == edges.end()) {
        c.fail(path, "no edge " + *tail + " -> " + *head + " #" + std::to_string(*index));
        return std::nullopt;
    }
    return it->second;
}

Json edge_json(const netmodel::Edge& e) { return Json{{"tail", e.tail}, {"head", e.head}, {"index", e.index}}; }

netmodel::Kernels explicit_kernels(Checker& c, const Json& j, const std::string& path, const netmodel::Network& net,
                                   const FieldRef& f) {
    netmodel::Kernels k = netmodel::Kernels::zero(f, net);
    if (!c.object(&j, path)) return k;
    std::map<EdgeKey, std::size_t> edges;
    for (std::size_t e = 0; e < net.edges.size(); ++e)
        edges[{net.edges[e].tail, net.edges[e].head, net.edges[e].index}] = e;
    for (const auto& [key, _] : j.items())
        if (key != "alpha" && key != "beta" && key != "eps") c.fail(path, "unknown key \"" + key + "\"");

    if (const Json* a = c.member(j, path, "alpha", false); c.array(a, path + "/alpha"))
        for (std::size_t k2 = 0; k2 < a->size(); ++k2) {
            const std::string p = ptr(path + "/alpha", k2);
            const Json& x = (*a)[k2];
            if (!c.object(&x, p)) continue;
            const auto src = c.integer(c.member(x, p, "source", true), p + "/source", 0,
                                       static_cast<std::int64_t>(net.sources.size()) - 1);
            const auto proc = c.integer(c.member(x, p, "process", false) ? &x.at("process") : nullptr, p + "/process", 0,
                                        src ? static_cast<std::int64_t>(net.sources[*src].processes) - 1 : 0);
            const auto e = edge_ref(c, c.member(x, p, "edge", true), p + "/edge", edges);
            const auto v = c.elem(c.member(x, p, "value", true), p + "/value", f.get());
            if (!src || !e || !v) continue;
            if (net.edges[*e].tail != net.sources[*src].node) {
                c.fail(p, "edge does not leave source " + std::to_string(*src));
                continue;
            }
            k.A(net.source_offset(*src) + static_cast<std::size_t>(proc.value_or(0)), *e) = *v;
        }
    if (const Json* b = c.member(j, path, "beta", false); c.array(b, path + "/beta"))
        for (std::size_t k2 = 0; k2 < b->size(); ++k2) {
            const std::string p = ptr(path + "/beta", k2);
            const Json& x = (*b)[k2];
            if (!c.object(&x, p)) continue;
            const auto from = edge_ref(c, c.member(x, p, "from", true), p + "/from", edges);
            const auto to = edge_ref(c, c.member(x, p, "to", true), p + "/to", edges);
            const auto v = c.elem(c.member(x, p, "value", true), p + "/value", f.get());
            if (!from || !to || !v) continue;
            if (net.edges[*from].head != net.edges[*to].tail) {
                c.fail(p, "edges are not adjacent");
                continue;
            }
            k.K(*from, *to) = *v;
        }
    if (const Json* ep = c.member(j, path, "eps", false); c.array(ep, path + "/eps"))
        for (std::size_t k2 = 0; k2 < ep->size(); ++k2) {
            const std::string p = ptr(path + "/eps", k2);
            const Json& x = (*ep)[k2];
            if (!c.object(&x, p)) continue;
            const auto from = edge_ref(c, c.member(x, p, "from", true), p + "/from", edges);
            const auto sink = c.integer(c.member(x, p, "sink", true), p + "/sink", 0,
                                        static_cast<std::int64_t>(net.sinks.size()) - 1);
            const auto out = c.integer(c.member(x, p, "output", false) ? &x.at("output") : nullptr, p + "/output", 0,
                                       sink ? static_cast<std::int64_t>(net.sinks[*sink].outputs) - 1 : 0);
            const auto v = c.elem(c.member(x, p, "value", true), p + "/value", f.get());
            if (!from || !sink || !v) continue;
            if (net.edges[*from].head != net.sinks[*sink].node) {
                c.fail(p, "edge does not enter sink " + std::to_string(*sink));
                continue;
            }
            k.B(net.sink_offset(*sink) + static_cast<std::size_t>(out.value_or(0)), *from) = *v;
        }
    return k;
}

Json kernels_json(const netmodel::Network& net, const netmodel::Kernels& k) {
    const galois::Field& F = *k.field();
    Json alpha = Json::array(), beta = Json::array(), eps = Json::array();
    for (std::size_t s = 0; s < net.sources.size(); ++s)
        for (std::size_t p = 0; p < net.sources[s].processes; ++p)
            for (std::size_t e = 0; e < net.edges.size(); ++e) {
                const Elem v = k.A(net.source_offset(s) + p, e);
                if (v.v != 0)
                    alpha.push_back(Json{{"source", s}, {"process", p}, {"edge", edge_json(net.edges[e])},
                                         {"value", elem_to_json(F, v)}});
            }
    for (std::size_t a = 0; a < net.edges.size(); ++a)
        for (std::size_t b = 0; b < net.edges.size(); ++b)
            if (k.K(a, b).v != 0)
                beta.push_back(Json{{"from", edge_json(net.edges[a])}, {"to", edge_json(net.edges[b])},
                                    {"value", elem_to_json(F, k.K(a, b))}});
    for (std::size_t s = 0; s < net.sinks.size(); ++s)
        for (std::size_t o = 0; o < net.sinks[s].outputs; ++o)
            for (std::size_t e = 0; e < net.edges.size(); ++e) {
                const Elem v = k.B(net.sink_offset(s) + o, e);
                if (v.v != 0)
                    eps.push_back(Json{{"from", edge_json(net.edges[e])}, {"sink", s}, {"output", o},
                                       {"value", elem_to_json(F, v)}});
            }
    return Json{{"alpha", alpha}, {"beta", beta}, {"eps", eps}};
}

std::optional<netmodel::LekAssignment> parse_leks(Checker& c, const Json& j, const netmodel::Network& net,
                                                  const FieldRef& f) {
    if (!f) {
        c.fail("/leks", "kernels need a \"field\"");
        return std::nullopt;
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const std::string prefix = "random:";
        if (s.rfind(prefix, 0) == 0) {
            try {
                std::size_t used = 0;
                const auto seed = std::stoull(s.substr(prefix.size()), &used);
                if (used == s.size() - prefix.size()) return netmodel::random_leks(net, f, seed);
            } catch (const std::exception&) {
            }
        }
        c.fail("/leks", "expected \"random:<seed>\"");
        return std::nullopt;
    }
    if (!c.object(&j, "/leks")) return std::nullopt;
    if (j.contains("time_indexed")) {
        const Json& t = j.at("time_indexed");
        if (!c.object(&t, "/leks/time_indexed")) return std::nullopt;
        const auto start = c.integer(c.member(t, "/leks/time_indexed", "start", true), "/leks/time_indexed/start",
                                     -(1 << 20), 1 << 20);
        const Json* sets = c.member(t, "/leks/time_indexed", "sets", true);
        if (!c.array(sets, "/leks/time_indexed/sets")) return std::nullopt;
        std::vector<netmodel::Kernels> ks;
        for (std::size_t k = 0; k < sets->size(); ++k)
            ks.push_back(explicit_kernels(c, (*sets)[k], ptr("/leks/time_indexed/sets", k), net, f));
        if (ks.empty()) c.fail("/leks/time_indexed/sets", "at least one kernel set is needed");
        if (!start || ks.empty()) return std::nullopt;
        return netmodel::LekAssignment(*start, std::move(ks));
    }
    return netmodel::LekAssignment(explicit_kernels(c, j, "/leks", net, f));
}

}  // namespace

SchemaViolations::SchemaViolations(std::vector<std::string> violations)
    : Error(Errc::SchemaError, join(violations)), violations_(std::move(violations)) {}

namespace {
// "[json.exception.parse_error.101] parse error at line 3, column 3: syntax error ..." -> "syntax error ..."
std::string detail(const std::string& what) {
    const auto colon = what.find(": ");
    return colon == std::string::npos ? what : what.substr(colon + 2);
}
}  // namespace

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                          detail(e.what()));
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

Json field_to_json(const galois::Field& f) {
    return Json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.spec().modulus}};
}

Json elem_to_json(const galois::Field& f, Elem e) {
    auto c = f.coeffs(e);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return Json(c);
}

Json poly_to_json(const galois::Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(elem_to_json(*p.field(), c));
    return a;
}

Json leks_to_json(const netmodel::Network& net, const netmodel::LekAssignment& leks) {
    if (leks.time_invariant()) return kernels_json(net, leks.fixed());
    Json sets = Json::array();
    for (const auto& k : leks.sets()) sets.push_back(kernels_json(net, k));
    return Json{{"time_indexed", Json{{"start", leks.window_start()}, {"sets", sets}}}};
}

Json network_to_json(const netmodel::Network& net, const FieldRef& field,
                     const std::optional<netmodel::LekAssignment>& leks) {
    Json j;
    if (field) j["field"] = field_to_json(*field);
    j["nodes"] = net.nodes;
    Json edges = Json::array();
    for (const auto& e : net.edges)
        edges.push_back(Json{{"tail", e.tail}, {"head", e.head}, {"index", e.index}, {"delay", e.delay}});
    j["edges"] = edges;
    Json sources = Json::array();
    for (const auto& s : net.sources) sources.push_back(Json{{"node", s.node}, {"processes", s.processes}});
    j["sources"] = sources;
    Json sinks = Json::array();
    for (const auto& s : net.sinks) {
        Json d = Json::array();
        for (auto [a, b] : s.demands) d.push_back(Json::array({a, b}));
        sinks.push_back(Json{{"node", s.node}, {"outputs", s.outputs}, {"demands", d}});
    }
    j["sinks"] = sinks;
    if (leks) j["leks"] = leks_to_json(net, *leks);
    return j;
}

NetworkDoc parse_network_doc(const Json& j) {
    Checker c;
    NetworkDoc doc;
    if (!c.object(&j, "")) c.raise();
    static const char* known[] = {"field", "nodes", "edges", "sources", "sinks", "leks", "alignment", "inputs", "name",
                                  "description"};
    for (const auto& [key, _] : j.items())
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            c.fail("/", "unknown key \"" + key + "\"");

    if (const Json* f = c.member(j, "", "field", false)) doc.field = c.field(f, "/field");

    auto& net = doc.net;
    if (const Json* nodes = c.member(j, "", "nodes", true); c.array(nodes, "/nodes"))
        for (std::size_t k = 0; k < nodes->size(); ++k)
            if (auto s = c.string(&(*nodes)[k], ptr("/nodes", k))) net.nodes.push_back(*s);
    if (const Json* edges = c.member(j, "", "edges", true); c.array(edges, "/edges"))
        for (std::size_t k = 0; k < edges->size(); ++k) {
            const std::string p = ptr("/edges", k);
            const Json& e = (*edges)[k];
            if (!c.object(&e, p)) continue;
            const auto tail = c.string(c.member(e, p, "tail", true), p + "/tail");
            const auto head = c.string(c.member(e, p, "head", true), p + "/head");
            const auto index = c.integer(c.member(e, p, "index", false), p + "/index", 0, UINT32_MAX);
            const auto delay = c.integer(c.member(e, p, "delay", false), p + "/delay", 1, 1 << 16);
            if (tail && head)
                net.edges.push_back({*tail, *head, static_cast<std::uint32_t>(index.value_or(0)),
                                     static_cast<std::uint32_t>(delay.value_or(1))});
        }
    if (const Json* sources = c.member(j, "", "sources", true); c.array(sources, "/sources"))
        for (std::size_t k = 0; k < sources->size(); ++k) {
            const std::string p = ptr("/sources", k);
            const Json& s = (*sources)[k];
            if (!c.object(&s, p)) continue;
            const auto node = c.string(c.member(s, p, "node", true), p + "/node");
            const auto procs = c.integer(c.member(s, p, "processes", false), p + "/processes", 1, 1 << 16);
            if (node) net.sources.push_back({*node, static_cast<std::size_t>(procs.value_or(1))});
        }
    if (const Json* sinks = c.member(j, "", "sinks", true); c.array(sinks, "/sinks"))
        for (std::size_t k = 0; k < sinks->size(); ++k) {
            const std::string p = ptr("/sinks", k);
            const Json& s = (*sinks)[k];
            if (!c.object(&s, p)) continue;
            const auto node = c.string(c.member(s, p, "node", true), p + "/node");
            const auto outs = c.integer(c.member(s, p, "outputs", false), p + "/outputs", 1, 1 << 16);
            std::vector<netmodel::Demand> demands;
            if (const Json* d = c.member(s, p, "demands", true); c.array(d, p + "/demands"))
                for (std::size_t q = 0; q < d->size(); ++q) {
                    const std::string dp = ptr(p + "/demands", q);
                    const Json& x = (*d)[q];
                    if (!x.is_array() || x.size() != 2) {
                        c.fail(dp, "expected [source, process]");
                        continue;
                    }
                    const auto a = c.integer(&x[0], dp + "/0", 0, 1 << 16);
                    const auto b = c.integer(&x[1], dp + "/1", 0, 1 << 16);
                    if (a && b) demands.emplace_back(static_cast<std::size_t>(*a), static_cast<std::size_t>(*b));
                }
            if (node) net.sinks.push_back({*node, static_cast<std::size_t>(outs.value_or(1)), demands});
        }
    if (const Json* a = c.member(j, "", "alignment", false); c.object(a, "/alignment"))
        if (auto n = c.integer(c.member(*a, "/alignment", "n", true), "/alignment/n", 1, 1 << 12))
            doc.n = static_cast<std::size_t>(*n);
    c.raise();

    netmodel::canonicalize(net);
    netmodel::validate(net);

    if (const Json* l = c.member(j, "", "leks", false)) doc.leks = parse_leks(c, *l, net, doc.field);
    if (const Json* in = c.member(j, "", "inputs", false); c.object(in, "/inputs")) {
        InputBlock block;
        block.t0 = c.integer(c.member(*in, "/inputs", "t0", false), "/inputs/t0", -(1 << 20), 1 << 20).value_or(0);
        const Json* series = c.member(*in, "/inputs", "series", true);
        if (!doc.field) c.fail("/inputs", "inputs need a \"field\"");
        if (c.array(series, "/inputs/series") && doc.field) {
            if (series->size() != net.sources.size())
                c.fail("/inputs/series", "one series per source expected");
            std::size_t longest = 0;
            for (std::size_t i = 0; i < series->size() && i < net.sources.size(); ++i) {
                const std::string p = ptr("/inputs/series", i);
                std::vector<std::vector<Elem>> s;
                if (c.array(&(*series)[i], p))
                    for (std::size_t t = 0; t < (*series)[i].size(); ++t) {
                        const std::string tp = ptr(p, t);
                        const Json& sym = (*series)[i][t];
                        if (!c.array(&sym, tp)) continue;
                        if (sym.size() != net.sources[i].processes)
                            c.fail(tp, "expected " + std::to_string(net.sources[i].processes) + " symbols");
                        std::vector<Elem> v;
                        for (std::size_t q = 0; q < sym.size(); ++q)
                            v.push_back(c.elem(&sym[q], ptr(tp, q), doc.field.get()).value_or(Elem{}));
                        s.push_back(std::move(v));
                    }
                longest = std::max(longest, s.size());
                block.series.push_back(std::move(s));
            }
            block.steps = static_cast<std::size_t>(
                c.integer(c.member(*in, "/inputs", "steps", false), "/inputs/steps", 0, 1 << 20)
                    .value_or(static_cast<std::int64_t>(longest)));
        }
        doc.inputs = std::move(block);
    }
    c.raise();
    if (doc.leks) netmodel::check_leks(net, *doc.leks);
    return doc;
}

bool is_transfer_doc(const Json& j) { return j.is_object() && j.contains("transfer"); }

TransferDoc parse_transfer_doc(const Json& j) {
    Checker c;
    TransferDoc doc;
    if (!c.object(&j, "")) c.raise();
    for (const auto& [key, _] : j.items())
        if (key != "field" && key != "transfer" && key != "name" && key != "description")
            c.fail("/", "unknown key \"" + key + "\"");
    doc.field = c.field(c.member(j, "", "field", true), "/field");
    const Json* t = c.member(j, "", "transfer", true);
    std::vector<std::size_t> mu, nu;
    std::vector<std::vector<std::vector<galois::Poly>>> rows;
    auto& fx = doc.fixture;
    if (c.object(t, "/transfer")) {
        if (const Json* s = c.member(*t, "/transfer", "sources", true); c.array(s, "/transfer/sources"))
            for (std::size_t k = 0; k < s->size(); ++k) {
                const std::string p = ptr("/transfer/sources", k);
                if (!c.object(&(*s)[k], p)) continue;
                mu.push_back(static_cast<std::size_t>(
                    c.integer(c.member((*s)[k], p, "processes", false), p + "/processes", 1, 1 << 16).value_or(1)));
            }
        const std::size_t width = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
        if (const Json* s = c.member(*t, "/transfer", "sinks", true); c.array(s, "/transfer/sinks"))
            for (std::size_t k = 0; k < s->size(); ++k) {
                const std::string p = ptr("/transfer/sinks", k);
                const Json& x = (*s)[k];
                if (!c.object(&x, p)) continue;
                fx.sink_names.push_back(
                    c.string(c.member(x, p, "name", false), p + "/name").value_or("sink" + std::to_string(k)));
                std::vector<netmodel::Demand> demands;
                if (const Json* d = c.member(x, p, "demands", true); c.array(d, p + "/demands"))
                    for (std::size_t q = 0; q < d->size(); ++q) {
                        const Json& y = (*d)[q];
                        const std::string dp = ptr(p + "/demands", q);
                        if (!y.is_array() || y.size() != 2) {
                            c.fail(dp, "expected [source, process]");
                            continue;
                        }
                        const auto a = c.integer(&y[0], dp + "/0", 0, static_cast<std::int64_t>(mu.size()) - 1);
                        const auto b = c.integer(&y[1], dp + "/1", 0, a ? static_cast<std::int64_t>(mu[*a]) - 1 : 0);
                        if (a && b) demands.emplace_back(static_cast<std::size_t>(*a), static_cast<std::size_t>(*b));
                    }
                fx.demands.push_back(demands);
                std::vector<std::vector<galois::Poly>> sink_rows;
                if (const Json* r = c.member(x, p, "rows", true); c.array(r, p + "/rows"))
                    for (std::size_t q = 0; q < r->size(); ++q) {
                        const std::string rp = ptr(p + "/rows", q);
                        if (!c.array(&(*r)[q], rp)) continue;
                        if ((*r)[q].size() != width) {
                            c.fail(rp, "expected " + std::to_string(width) + " entries");
                            continue;
                        }
                        std::vector<galois::Poly> row;
                        for (std::size_t e = 0; e < width; ++e)
                            row.push_back(c.poly(&(*r)[q][e], ptr(rp, e), doc.field).value_or(galois::Poly(doc.field)));
                        sink_rows.push_back(std::move(row));
                    }
                if (sink_rows.empty()) c.fail(p + "/rows", "a sink needs at least one row");
                nu.push_back(sink_rows.size());
                rows.push_back(std::move(sink_rows));
            }
    }
    c.raise();
    const std::size_t width = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
    galois::PolyMatrix raw(doc.field, std::accumulate(nu.begin(), nu.end(), std::size_t{0}), width);
    std::size_t r = 0;
    for (const auto& sink : rows)
        for (const auto& row : sink) {
            for (std::size_t e = 0; e < width; ++e) raw(r, e) = row[e];
            ++r;
        }
    fx.transfer = netmodel::transfer_from_raw(std::move(raw), mu, nu);
    return doc;
}

Json transfer_doc_to_json(const fixtures::TransferFixture& fx) {
    const auto& tr = fx.transfer;
    Json sources = Json::array();
    for (std::size_t i = 0; i < tr.mu_sizes.size(); ++i)
        sources.push_back(Json{{"name", "s" + std::to_string(i + 1)}, {"processes", tr.mu_sizes[i]}});
    Json sinks = Json::array();
    for (std::size_t j = 0; j < tr.nu_sizes.size(); ++j) {
        Json d = Json::array();
        for (auto [a, b] : fx.demands[j]) d.push_back(Json::array({a, b}));
        Json rows = Json::array();
        for (std::size_t r = 0; r < tr.nu_sizes[j]; ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < tr.raw.cols(); ++c) row.push_back(poly_to_json(tr.raw(tr.sink_offset(j) + r, c)));
            rows.push_back(row);
        }
        sinks.push_back(Json{{"name", fx.sink_names[j]}, {"outputs", tr.nu_sizes[j]}, {"demands", d}, {"rows", rows}});
    }
    return Json{{"field", field_to_json(*tr.field())}, {"transfer", Json{{"sources", sources}, {"sinks", sinks}}}};
}

}  // namespace tnc::cli
