#include "retract/classifier.hpp"

#include "retract/families.hpp"
#include "retract/gadgets.hpp"

#include <algorithm>

namespace retract {

auto to_string(ComponentTag tag) -> std::string
{
    switch (tag) {
    case ComponentTag::Trivial: return "trivial";
    case ComponentTag::Hbis: return "hbis";
    case ComponentTag::IrreflexiveCaterpillar: return "caterpillar";
    case ComponentTag::Hard: return "hard";
    }
    return "hard";
}

auto to_string(VerdictClass c) -> std::string
{
    switch (c) {
    case VerdictClass::FP: return "FP";
    case VerdictClass::BIS: return "BIS";
    case VerdictClass::SAT: return "SAT";
    case VerdictClass::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

auto is_hard_x_shape(unsigned k1, unsigned k2, unsigned k3) -> bool
{
    if (k2 + k3 >= 3)
        return true; // contains an induced WR3
    if (k2 == 0 && k3 == 0)
        return k1 >= 1; // independent sets
    if (k2 == 0 && k3 == 1)
        return k1 >= 1;
    if (k2 == 1 && k3 == 0)
        return k1 >= 1;
    if (k2 == 2 && k3 == 0)
        return k1 >= 2;
    if (k2 == 1 && k3 == 1)
        return k1 >= 3;
    if (k2 == 0 && k3 == 2)
        return k1 >= 5;
    return false;
}

auto x_shape_of_neighbourhood(const Graph & h, Vertex b) -> std::optional<std::array<unsigned, 3>>
{
    if (b >= h.vertex_count() || ! h.looped(b))
        return std::nullopt;
    auto sub = induced_subgraph(h, neighbourhood(h, b));
    auto centre = static_cast<Vertex>(std::find(sub.original.begin(), sub.original.end(), b) - sub.original.begin());
    try {
        auto st = decompose_wr3_target(sub.graph, centre);
        std::array<unsigned, 3> k{static_cast<unsigned>(st.u.size()), st.k(),
            static_cast<unsigned>(st.pairs.size())};
        return k;
    }
    catch (const GadgetError &) {
        return std::nullopt;
    }
}

auto find_degree2_bristle(const Graph & h) -> StructuralWitness
{
    for (Vertex b = 0; b < h.vertex_count(); ++b) {
        if (! h.looped(b))
            continue;
        for (auto g : h.neighbours(b)) {
            StructuralWitness w{WitnessTag::Degree2Bristle, {b, g}};
            if (validate_witness(h, w))
                return w;
        }
    }
    return {};
}

auto find_hard_x_neighbourhood(const Graph & h) -> StructuralWitness
{
    for (Vertex b = 0; b < h.vertex_count(); ++b) {
        auto k = x_shape_of_neighbourhood(h, b);
        if (k && is_hard_x_shape((*k)[0], (*k)[1], (*k)[2])) {
            StructuralWitness w{WitnessTag::XNeighbourhood, {b}};
            w.k1 = (*k)[0];
            w.k2 = (*k)[1];
            w.k3 = (*k)[2];
            return w;
        }
    }
    return {};
}

namespace
{
    auto hardness_witness(const Graph & hc) -> StructuralWitness
    {
        if (auto w = find_mixed_triangle(hc))
            return w;
        if (auto w = find_induced_wr3(hc))
            return w;
        if (auto w = find_induced_net(hc))
            return w;
        if (auto w = find_induced_reflexive_cycle(hc, 5))
            return w;
        if (auto w = find_degree2_bristle(hc))
            return w;
        return find_hard_x_neighbourhood(hc);
    }
}

auto classify_component(const Graph & hc, bool square_free) -> ComponentReport
{
    ComponentReport r;
    r.vertices = all_vertices(hc);
    auto shape = classify_component_shape(hc);
    if (shape.trivial)
        r.tag = ComponentTag::Trivial;
    else if (recognize_hbis(hc))
        r.tag = ComponentTag::Hbis;
    else if (shape.irreflexive_caterpillar)
        r.tag = ComponentTag::IrreflexiveCaterpillar;
    else {
        r.tag = ComponentTag::Hard;
        if (square_free)
            r.witness = hardness_witness(hc);
    }
    return r;
}

auto classify(const Graph & h) -> ClassVerdict
{
    ClassVerdict v;
    v.square_free = is_square_free(h);
    bool all_trivial = true, all_easy = true, all_trivial_or_hbis = true;
    for (const auto & comp : connected_components(h)) {
        auto sub = induced_subgraph(h, comp);
        auto r = classify_component(sub.graph, v.square_free);
        r.vertices = comp;
        for (auto & x : r.witness.vertices)
            x = sub.original[x];
        all_trivial = all_trivial && r.tag == ComponentTag::Trivial;
        all_easy = all_easy && r.tag != ComponentTag::Hard;
        all_trivial_or_hbis = all_trivial_or_hbis && (r.tag == ComponentTag::Trivial || r.tag == ComponentTag::Hbis);
        v.components.push_back(std::move(r));
    }
    if (all_trivial)
        v.verdict = VerdictClass::FP;
    else if (v.square_free)
        v.verdict = all_easy ? VerdictClass::BIS : VerdictClass::SAT;
    else
        v.verdict = all_trivial_or_hbis ? VerdictClass::BIS : VerdictClass::UNKNOWN;
    return v;
}

} // namespace retract
