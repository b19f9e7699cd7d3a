#include "momenta/moment_sequence.hpp"

#include <fstream>

#include "momenta/errors.hpp"

namespace momenta {

std::string kind_to_string(Kind kind) {
    return kind == Kind::Hamburger ? "hamburger" : "stieltjes";
}

Kind kind_from_string(std::string_view text) {
    if (text == "hamburger") return Kind::Hamburger;
    if (text == "stieltjes") return Kind::Stieltjes;
    throw DomainError("unknown kind: " + std::string(text));
}

MomentSequence::MomentSequence(std::vector<Rat> e, Kind k, std::string n)
    : entries(std::move(e)), kind(k), name(std::move(n)) {
    if (entries.empty())
        throw DomainError("moment sequence needs at least one entry");
}

MomentSequence MomentSequence::from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("moments"))
        throw DomainError("sequence JSON needs \"kind\" and \"moments\"");
    std::vector<Rat> entries;
    for (const auto& m : j.at("moments")) {
        if (m.is_number_integer())
            entries.push_back(Rat(m.get<long long>()));
        else if (m.is_string())
            entries.push_back(rat_from_string(m.get<std::string>()));
        else
            throw DomainError("moments must be strings or integers");
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    return MomentSequence(std::move(entries),
                          kind_from_string(j.at("kind").get<std::string>()),
                          std::move(name));
}

nlohmann::ordered_json MomentSequence::to_json() const {
    nlohmann::ordered_json j;
    if (!name.empty()) j["name"] = name;
    j["kind"] = kind_to_string(kind);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) arr.push_back(rat_to_string(e));
    j["moments"] = std::move(arr);
    return j;
}

MomentSequence MomentSequence::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    nlohmann::ordered_json j;
    in >> j;
    return from_json(j);
}

MomentSequence trim(const MomentSequence& h, std::size_t j) {
    if (j >= h.size())
        throw DomainError("trim shift " + std::to_string(j) +
                          " out of range for length " + std::to_string(h.size()));
    std::vector<Rat> entries(h.entries.begin() + static_cast<long>(j),
                             h.entries.end());
    std::string name = h.name;
    if (!name.empty() && j > 0) name += "[" + std::to_string(j) + ":]";
    return MomentSequence(std::move(entries), h.kind, std::move(name));
}

MomentSequence symmetrize(const MomentSequence& s) {
    if (s.kind != Kind::Stieltjes)
        throw KindError("symmetrize needs a Stieltjes sequence");
    std::vector<Rat> entries;
    entries.reserve(2 * s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        entries.push_back(s[i]);
        if (i + 1 < s.size()) entries.push_back(Rat(0));
    }
    std::string name = s.name.empty() ? "" : s.name + "[sym]";
    return MomentSequence(std::move(entries), Kind::Hamburger, std::move(name));
}

MomentSequence desymmetrize(const MomentSequence& h) {
    if (h.kind != Kind::Hamburger)
        throw KindError("desymmetrize needs a Hamburger sequence");
    std::vector<Rat> entries;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i % 2 == 0) {
            entries.push_back(h[i]);
        } else if (h[i] != 0) {
            throw NotSymmetricError("nonzero odd entry at index " +
                                    std::to_string(i));
        }
    }
    std::string name = h.name.empty() ? "" : h.name + "[desym]";
    return MomentSequence(std::move(entries), Kind::Stieltjes, std::move(name));
}

MomentSequence convex_combine(const MomentSequence& h, const MomentSequence& t,
                              const Rat& eta) {
    if (eta <= 0 || eta >= 1)
        throw DomainError("eta must lie strictly between 0 and 1");
    if (h.size() != t.size())
        throw ShapeError("convex_combine needs equal lengths");
    if (h.kind != t.kind) throw ShapeError("convex_combine needs equal kinds");
    std::vector<Rat> entries(h.size());
    Rat tail = Rat(1) - eta;
    for (std::size_t i = 0; i < h.size(); ++i)
        entries[i] = eta * h[i] + tail * t[i];
    return MomentSequence(std::move(entries), h.kind);
}

MomentSequence perturb_entry(const MomentSequence& h, std::size_t m,
                             const Rat& gamma) {
    if (m >= h.size())
        throw DomainError("perturbation index " + std::to_string(m) +
                          " out of range");
    MomentSequence out = h;
    out.entries[m] += gamma;
    return out;
}

} // namespace momenta
