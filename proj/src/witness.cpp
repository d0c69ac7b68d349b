#include "petrial/witness.hpp"

#include <algorithm>
#include <utility>

#include "petrial/errors.hpp"

namespace petrial {

std::string to_string(WitnessKind k) {
    return k == WitnessKind::Path ? "path-witness" : "nonpath-witness";
}

namespace {

Graft replay_all(Graft g, const std::vector<Vertex>& sequence) {
    for (Vertex v : sequence) g = g.lc_delete(v);
    return g;
}

std::string describe(const SimpleGraph& g) {
    std::string s = "vertices {";
    bool first = true;
    g.vertices().for_each([&](Vertex v) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    });
    s += "} edges {";
    first = true;
    g.vertices().for_each([&](Vertex u) {
        g.neighbours(u).for_each([&](Vertex v) {
            if (u < v) {
                if (!first) s += ",";
                s += std::to_string(u) + "-" + std::to_string(v);
                first = false;
            }
        });
    });
    return s + "}";
}

struct MarksAndSeq {
    BitVec marks;
    std::vector<Vertex> sequence;
};

MarksAndSeq build_path(const SimpleGraph& p) {
    MarksAndSeq out;
    const std::size_t n = p.vertex_count();
    if (n <= 1) return out;
    std::vector<Vertex> leaves;
    p.vertices().for_each([&](Vertex v) {
        if (p.degree(v) == 1) leaves.push_back(v);
    });
    out.marks.set(leaves[0]); // ascending id iteration: leaves[0] < leaves[1]
    out.marks.set(leaves[1]);
    Vertex prev = leaves[0];
    Vertex cur = leaves[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.sequence.push_back(cur);
        Vertex next = cur;
        p.neighbours(cur).for_each([&](Vertex u) {
            if (u != prev) next = u;
        });
        prev = cur;
        cur = next;
    }
    return out;
}

MarksAndSeq build_nonpath(const SimpleGraph& g) {
    if (!g.connected()) {
        // Only the first two components need reducing: each ends with at
        // least one isolated unmarked vertex. The rest ride along unmarked.
        const std::vector<BitVec> comps = g.components();
        MarksAndSeq out;
        for (std::size_t j = 0; j < 2; ++j) {
            const SimpleGraph comp = g.induced(comps[j]);
            const MarksAndSeq part = comp.is_path() ? build_path(comp) : build_nonpath(comp);
            out.marks |= part.marks;
            out.sequence.insert(out.sequence.end(), part.sequence.begin(),
                                part.sequence.end());
        }
        return out;
    }
    const std::size_t n = g.vertex_count();
    if (n == 3) {
        // The only connected non-path on three vertices is the triangle:
        // mark everything, delete the lowest id, two unmarked loners remain.
        MarksAndSeq out;
        out.marks = g.vertices();
        out.sequence.push_back(g.vertices().find_first());
        return out;
    }
    for (Vertex u : g.vertex_ids()) {
        const SimpleGraph h = g.local_complement_delete(u);
        if (h.is_path()) continue;
        MarksAndSeq sub = build_nonpath(h);
        sub.marks.set(u); // u was deleted from h, so this is (L' u {u})
        sub.marks ^= g.neighbours(u);
        sub.sequence.insert(sub.sequence.begin(), u);
        return sub;
    }
    throw InternalInvariantError("every single deletion leaves a path in " + describe(g));
}

} // namespace

WitnessCertificate path_witness(const SimpleGraph& p) {
    if (!p.is_path()) throw PreconditionError("the graph is not a path");
    MarksAndSeq ms = build_path(p);
    WitnessCertificate c;
    c.kind = WitnessKind::Path;
    c.initial = Graft(p, std::move(ms.marks));
    c.sequence = std::move(ms.sequence);
    c.final = replay_all(c.initial, c.sequence);
    return c;
}

WitnessCertificate nonpath_witness(const SimpleGraph& g) {
    if (g.vertex_count() < 2)
        throw PreconditionError("a nonpath witness needs at least two vertices");
    if (g.is_path())
        throw PreconditionError("the graph is a path, which has no nonpath witness");
    MarksAndSeq ms = build_nonpath(g);
    WitnessCertificate c;
    c.kind = WitnessKind::Nonpath;
    c.initial = Graft(g, std::move(ms.marks));
    c.sequence = std::move(ms.sequence);
    c.final = replay_all(c.initial, c.sequence);
    return c;
}

CheckReport check_witness(const WitnessCertificate& c) {
    CheckReport r;
    const std::size_t n0 = c.initial.graph().vertex_count();
    BitVec seen;
    for (Vertex v : c.sequence) {
        if (!c.initial.graph().has_vertex(v)) {
            r.failure = "sequence vertex " + std::to_string(v) + " is not in the initial graph";
            return r;
        }
        if (seen.test(v)) {
            r.failure = "sequence vertex " + std::to_string(v) + " is deleted twice";
            return r;
        }
        seen.set(v);
    }
    if (c.final.graph().vertex_count() + c.sequence.size() != n0) {
        r.failure = "final graft has " + std::to_string(c.final.graph().vertex_count()) +
                    " vertices, expected " + std::to_string(n0 - c.sequence.size());
        return r;
    }

    Graft cur = c.initial;
    r.corank = cur.adjacency().corank();
    for (std::size_t i = 0; i < c.sequence.size(); ++i) {
        const Vertex v = c.sequence[i];
        const std::string step = "step " + std::to_string(i + 1);
        if (!cur.marks().test(v)) {
            r.failure = step + ": vertex " + std::to_string(v) + " is not marked";
            return r;
        }
        cur = cur.lc_delete(v);
        const std::size_t ck = cur.adjacency().corank();
        if (ck != r.corank) {
            r.failure = step + ": corank changed from " + std::to_string(r.corank) +
                        " to " + std::to_string(ck);
            return r;
        }
        ++r.steps;
    }
    if (cur != c.final) {
        r.failure = "replayed end state differs from the final graft";
        return r;
    }
    if (c.kind == WitnessKind::Path) {
        if (c.final.graph().vertex_count() != 1) {
            r.failure = "path witness must end with exactly one vertex";
            return r;
        }
        if (c.final.marks().any()) {
            r.failure = "path witness must end with no marks";
            return r;
        }
    } else {
        std::size_t loners = 0;
        c.final.graph().vertices().for_each([&](Vertex v) {
            if (c.final.graph().degree(v) == 0 && !c.final.marks().test(v)) ++loners;
        });
        if (loners < 2) {
            r.failure = "nonpath witness must end with at least two isolated unmarked "
                        "vertices, found " + std::to_string(loners);
            return r;
        }
    }
    r.ok = true;
    return r;
}

NonbinomialCertificate certify_nonbinomial(const SimpleGraph& g) {
    if (!g.connected())
        throw PreconditionError("nonbinomial certification needs a connected graph");
    NonbinomialCertificate out;
    out.certificate = nonpath_witness(g);
    const CheckReport r = check_witness(out.certificate);
    if (!r.ok)
        throw InternalInvariantError("constructed witness failed its own check: " + r.failure);
    out.corank = r.corank;
    if (out.corank < 2)
        throw InternalInvariantError("nonpath witness has corank " +
                                     std::to_string(out.corank) + ", expected >= 2");
    return out;
}

namespace {

nlohmann::ordered_json graft_to_json(const Graft& gft, std::size_t n_field) {
    nlohmann::ordered_json j;
    j["n"] = n_field;
    auto edges = nlohmann::ordered_json::array();
    const SimpleGraph& g = gft.graph();
    g.vertices().for_each([&](Vertex u) {
        g.neighbours(u).for_each([&](Vertex v) {
            if (u < v) edges.push_back({u, v});
        });
    });
    j["edges"] = std::move(edges);
    auto marks = nlohmann::ordered_json::array();
    gft.marks().for_each([&](Vertex v) { marks.push_back(v); });
    j["marks"] = std::move(marks);
    return j;
}

std::size_t get_uint(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_unsigned())
        throw InvalidInputError(where + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

const nlohmann::json& get_field(const nlohmann::json& j, const char* key,
                                const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInputError(where + " is missing '" + key + "'");
    return j.at(key);
}

// Shared by initial (keep = everything) and final (keep = survivors).
Graft graft_from_json(const nlohmann::json& j, std::size_t capacity, const BitVec& keep,
                      const std::string& where) {
    SimpleGraph g = SimpleGraph(capacity).induced(keep);
    const nlohmann::json& edges = get_field(j, "edges", where);
    if (!edges.is_array()) throw InvalidInputError(where + ".edges must be an array");
    for (const nlohmann::json& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidInputError(where + ".edges entries must be pairs [u, v]");
        const std::size_t u = get_uint(e.at(0), where + " edge endpoint");
        const std::size_t v = get_uint(e.at(1), where + " edge endpoint");
        try {
            g.add_edge(u, v);
        } catch (const InvalidInputError& ex) {
            throw InvalidInputError(where + ": " + ex.what());
        }
    }
    const nlohmann::json& marks = get_field(j, "marks", where);
    if (!marks.is_array()) throw InvalidInputError(where + ".marks must be an array");
    BitVec mark_set(capacity + 1);
    for (const nlohmann::json& m : marks) {
        const std::size_t v = get_uint(m, where + " mark");
        if (mark_set.test(v)) throw InvalidInputError(where + " lists mark " + std::to_string(v) + " twice");
        mark_set.set(v);
    }
    try {
        return Graft(std::move(g), std::move(mark_set));
    } catch (const InvalidInputError& ex) {
        throw InvalidInputError(where + ": " + ex.what());
    }
}

} // namespace

nlohmann::ordered_json to_json(const WitnessCertificate& c) {
    const std::size_t n0 = c.initial.graph().vertex_count();
    for (std::size_t v = 0; v < n0; ++v)
        if (!c.initial.graph().has_vertex(v))
            throw InvalidInputError(
                "certificate serialization needs contiguous initial vertex ids 0..n-1");
    nlohmann::ordered_json j;
    j["kind"] = to_string(c.kind);
    j["initial"] = graft_to_json(c.initial, n0);
    j["sequence"] = c.sequence;
    j["final"] = graft_to_json(c.final, c.final.graph().vertex_count());
    return j;
}

WitnessCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInputError("certificate must be a JSON object");
    const nlohmann::json& kind = get_field(j, "kind", "certificate");
    if (!kind.is_string()) throw InvalidInputError("certificate kind must be a string");
    WitnessCertificate c;
    if (kind == "path-witness")
        c.kind = WitnessKind::Path;
    else if (kind == "nonpath-witness")
        c.kind = WitnessKind::Nonpath;
    else
        throw InvalidInputError("unknown certificate kind '" + kind.get<std::string>() + "'");

    const nlohmann::json& initial = get_field(j, "initial", "certificate");
    const std::size_t n0 = get_uint(get_field(initial, "n", "initial"), "initial.n");
    BitVec everything(n0 + 1);
    for (std::size_t v = 0; v < n0; ++v) everything.set(v);
    c.initial = graft_from_json(initial, n0, everything, "initial");

    const nlohmann::json& sequence = get_field(j, "sequence", "certificate");
    if (!sequence.is_array()) throw InvalidInputError("certificate sequence must be an array");
    BitVec deleted(n0 + 1);
    for (const nlohmann::json& s : sequence) {
        const std::size_t v = get_uint(s, "sequence entry");
        if (v >= n0) throw InvalidInputError("sequence vertex " + std::to_string(v) + " is out of range");
        if (deleted.test(v)) throw InvalidInputError("sequence vertex " + std::to_string(v) + " appears twice");
        deleted.set(v);
        c.sequence.push_back(v);
    }

    const nlohmann::json& final_j = get_field(j, "final", "certificate");
    const std::size_t n1 = get_uint(get_field(final_j, "n", "final"), "final.n");
    if (n1 + c.sequence.size() != n0)
        throw InvalidInputError("final.n is " + std::to_string(n1) + ", expected " +
                                std::to_string(n0 - c.sequence.size()) +
                                " (initial n minus sequence length)");
    const BitVec survivors = everything ^ deleted;
    c.final = graft_from_json(final_j, n0, survivors, "final");
    return c;
}

WitnessCertificate parse_certificate(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ParseError(e.what(), line);
    }
    return certificate_from_json(j);
}

} // namespace petrial
