// Command-line front end: exact moment-sequence diagnostics as JSON.
//
// Exit codes: 0 success, 1 usage, 2 domain/kind errors, 3 truncation or
// degenerate prefixes.  Errors are emitted as a JSON object on stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "momenta/corpus.hpp"
#include "momenta/determinacy.hpp"
#include "momenta/errors.hpp"
#include "momenta/hankel.hpp"
#include "momenta/real.hpp"
#include "momenta/rigidity.hpp"

using nlohmann::ordered_json;
using namespace momenta;

namespace {

struct GlobalOptions {
    unsigned precision = 256;
    std::optional<std::size_t> window;
    std::optional<std::string> ratio_threshold;
    bool compact = false;
};

Rat decimal_to_rat(const std::string& text) {
    // Accept "p/q", integers, or plain decimals like "0.85".
    auto dot = text.find('.');
    if (dot == std::string::npos) return rat_from_string(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    Rat num = rat_from_string(digits);
    Rat den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return num / den;
}

determinacy::DiagParams diag_params(const GlobalOptions& g) {
    determinacy::DiagParams p;
    if (g.window) p.window = *g.window;
    if (g.ratio_threshold) p.ratio_threshold = decimal_to_rat(*g.ratio_threshold);
    return p;
}

void emit(const ordered_json& j, const GlobalOptions& g) {
    if (g.compact)
        std::cout << j.dump() << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

ordered_json psd_to_json(const hankel::PsdVerdict& v) {
    ordered_json j;
    switch (v.status) {
    case hankel::PsdVerdict::Status::PositiveDefinite:
        j["status"] = "positive_definite";
        break;
    case hankel::PsdVerdict::Status::PositiveSemidefiniteSingular:
        j["status"] = "positive_semidefinite_singular";
        j["rank"] = v.rank;
        break;
    case hankel::PsdVerdict::Status::NotPsd:
        j["status"] = "not_psd";
        j["witness_order"] = v.witness_order;
        break;
    }
    j["order"] = v.order;
    return j;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        if (!item.empty()) out.push_back(rat_from_string(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Hamburger/Stieltjes moment sequence diagnostics"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--precision", g.precision,
                   "floating precision in bits (default 256)");
    std::size_t window_opt = 0;
    auto* wopt = app.add_option("--window", window_opt,
                                "diagnostic ratio window (default 4)");
    std::string ratio_opt;
    auto* ropt = app.add_option("--ratio-threshold", ratio_opt,
                                "convergence ratio threshold (default 0.9)");
    app.add_flag("--json", g.compact, "compact single-line JSON output");

    std::string file, name;
    std::size_t order = 3, terms = 12, nmax = 2, n_steps = 1, m_index = 0;
    std::size_t length = 16;
    std::string c1_text = "0", c2_text = "0", margins_text = "1",
                odd_text;
    bool allow_large = false;

    auto* check = app.add_subcommand("check", "PSD / Stieltjes prefix verdicts");
    check->add_option("file", file)->required();
    check->add_option("--order", order, "Hankel order (default 3)");

    auto* index = app.add_subcommand("index", "index-of-determinacy window");
    index->add_option("file", file)->required();
    index->add_option("--nmax", nmax, "largest trim level (default 2)");
    index->add_option("--terms", terms, "zero-data truncation K (default 12)");

    auto* region = app.add_subcommand("region", "prepend feasibility region");
    region->add_option("file", file)->required();
    region->add_option("--terms", terms, "truncation K (default 12)");

    auto* prepend_cmd = app.add_subcommand("prepend", "prepend a (c-1, c-2) pair");
    prepend_cmd->add_option("file", file)->required();
    prepend_cmd->add_option("--c1", c1_text, "new odd entry c_-1")->required();
    prepend_cmd->add_option("--c2", c2_text, "new even entry c_-2")->required();
    prepend_cmd->add_option("--terms", terms, "truncation K (default 12)");

    auto* extend = app.add_subcommand("extend", "iterated indeterminate extension");
    extend->add_option("file", file)->required();
    extend->add_option("--n", n_steps, "number of prepend steps (default 1)");
    extend->add_option("--margins", margins_text,
                       "comma-separated positive margins (default 1)");
    extend->add_option("--odd", odd_text,
                       "comma-separated odd values (default all 0)");
    extend->add_option("--terms", terms, "truncation K (default 12)");

    auto* perturb = app.add_subcommand("perturb", "single-entry feasibility interval");
    perturb->add_option("file", file)->required();
    perturb->add_option("--m", m_index, "perturbed entry index")->required();
    perturb->add_option("--order", order, "Hankel order (default 3)");

    auto* report = app.add_subcommand("report", "rigidity classification");
    report->add_option("file", file)->required();
    report->add_option("--nmax", nmax, "largest trim level (default 2)");
    report->add_option("--terms", terms, "truncation K (default 12)");
    report->add_option("--order", order, "perturb sweep order (default 3)");

    auto* corpus_cmd = app.add_subcommand("corpus", "reference sequences");
    auto* corpus_list = corpus_cmd->add_subcommand("list", "list entries");
    auto* corpus_get = corpus_cmd->add_subcommand("get", "emit one entry");
    corpus_get->add_option("name", name)->required();
    corpus_get->add_option("--len", length, "number of entries (default 16)");
    corpus_get->add_flag("--allow-large", allow_large,
                         "permit --len above 32 (entries grow factorially)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (wopt->count()) g.window = window_opt;
    if (ropt->count()) g.ratio_threshold = ratio_opt;
    set_real_precision_bits(g.precision);
    determinacy::DiagParams diag = diag_params(g);

    auto load = [&]() { return MomentSequence::load(file); };
    // The Hamburger-level constructions apply to Stieltjes input through the
    // symmetric correspondence.
    auto load_hamburger = [&](bool& symmetrized) {
        MomentSequence seq = load();
        symmetrized = seq.kind == Kind::Stieltjes;
        return symmetrized ? symmetrize(seq) : seq;
    };

    if (*check) {
        MomentSequence seq = load();
        ordered_json j;
        if (!seq.name.empty()) j["name"] = seq.name;
        j["kind"] = kind_to_string(seq.kind);
        j["order"] = order;
        if (seq.kind == Kind::Stieltjes) {
            auto [plain, shifted] = hankel::stieltjes_prefix_check(seq, order);
            j["plain"] = psd_to_json(plain);
            j["shifted"] = psd_to_json(shifted);
            j["stieltjes_feasible"] = !plain.not_psd() && !shifted.not_psd();
        } else {
            j["verdict"] = psd_to_json(hankel::psd_prefix(seq, order));
        }
        emit(j, g);
    } else if (*index) {
        MomentSequence seq = load();
        determinacy::IndexWindow window =
            seq.kind == Kind::Stieltjes
                ? determinacy::stieltjes_index_estimate(seq, nmax, terms, diag)
                : determinacy::index_estimate(seq, nmax, terms, diag);
        ordered_json j;
        if (!seq.name.empty()) j["name"] = seq.name;
        j["kind"] = kind_to_string(seq.kind);
        j["nmax"] = nmax;
        j["K"] = terms;
        j.update(window.to_json());
        emit(j, g);
    } else if (*region) {
        bool symmetrized = false;
        MomentSequence seq = load_hamburger(symmetrized);
        ordered_json j = rigidity::prepend_region(seq, terms).to_json();
        j["symmetrized"] = symmetrized;
        emit(j, g);
    } else if (*prepend_cmd) {
        bool symmetrized = false;
        MomentSequence seq = load_hamburger(symmetrized);
        rigidity::PrependResult result = rigidity::prepend(
            seq, rat_from_string(c1_text), rat_from_string(c2_text), terms);
        ordered_json j;
        j["classification"] =
            rigidity::prepend_class_to_string(result.classification);
        j["slack"] = rat_to_string(result.slack);
        j["margin_required"] = rat_to_string(result.margin_required);
        j["symmetrized_input"] = symmetrized;
        j["sequence"] = result.sequence.to_json();
        emit(j, g);
    } else if (*extend) {
        MomentSequence seq = load();
        std::vector<Rat> margins = parse_rat_list(margins_text);
        if (margins.size() == 1 && n_steps > 1)
            margins.assign(n_steps, margins.front());
        ordered_json j;
        MomentSequence out = [&] {
            if (seq.kind == Kind::Stieltjes)
                return rigidity::stieltjes_extend(seq, n_steps, margins, terms,
                                                  diag);
            std::vector<Rat> odd(n_steps, Rat(0));
            if (!odd_text.empty()) {
                odd = parse_rat_list(odd_text);
                if (odd.size() != n_steps)
                    throw DomainError("--odd needs exactly n values");
            }
            return rigidity::extend_indeterminate(seq, n_steps, odd, margins,
                                                  terms, diag);
        }();
        j["steps"] = n_steps;
        j["sequence"] = out.to_json();
        emit(j, g);
    } else if (*perturb) {
        MomentSequence seq = load();
        emit(rigidity::perturb_interval(seq, m_index, order).to_json(), g);
    } else if (*report) {
        MomentSequence seq = load();
        rigidity::ReportParams params;
        params.K = terms;
        params.order = order;
        params.diag = diag;
        ordered_json j = rigidity::rigidity_report(seq, nmax, params).to_json();
        if (!seq.name.empty()) j["name"] = seq.name;
        emit(j, g);
    } else if (*corpus_cmd) {
        if (*corpus_list) {
            ordered_json arr = ordered_json::array();
            for (const auto& entry : corpus::list()) {
                ordered_json e;
                e["name"] = entry.name;
                e["kind"] = kind_to_string(entry.kind);
                e["analytic_status"] = entry.analytic_status;
                e["note"] = entry.note;
                arr.push_back(std::move(e));
            }
            emit(ordered_json{{"entries", std::move(arr)}}, g);
        } else if (*corpus_get) {
            if (length > 32 && !allow_large)
                throw DomainError(
                    "corpus --len above 32 needs --allow-large "
                    "(entries grow factorially)");
            emit(corpus::get(name, length).to_json(), g);
        } else {
            throw DomainError("corpus needs a list or get subcommand");
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const TruncationError& e) {
        std::cerr << ordered_json{{"error", {{"type", "truncation"},
                                             {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 3;
    } catch (const DegenerateError& e) {
        std::cerr << ordered_json{{"error", {{"type", "degenerate"},
                                             {"message", e.what()},
                                             {"rank", e.rank()}}}}
                         .dump()
                  << "\n";
        return 3;
    } catch (const PrecisionError& e) {
        std::cerr << ordered_json{{"error", {{"type", "precision"},
                                             {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << ordered_json{{"error", {{"type", "domain"},
                                             {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << ordered_json{{"error", {{"type", "internal"},
                                             {"message", e.what()}}}}
                         .dump()
                  << "\n";
        return 2;
    }
}
