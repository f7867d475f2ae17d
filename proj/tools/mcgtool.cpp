// mcgtool: command-line front end for the exact mapping-class/extension
// toolkit. Every command prints one line of JSON on stdout. Exit codes:
// 0 success, 1 a verification or check failed (JSON still printed), 2 usage.
#include "CLI11.hpp"
#include "json.hpp"

#include "mcg/abgrp.hpp"
#include "mcg/cocyc.hpp"
#include "mcg/cohom.hpp"
#include "mcg/heis.hpp"
#include "mcg/intmath.hpp"
#include "mcg/jacobi.hpp"
#include "mcg/mapping_class.hpp"
#include "mcg/presentation.hpp"
#include "mcg/quat.hpp"
#include "mcg/report.hpp"
#include "mcg/sl2.hpp"
#include "mcg/words.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace mcg;

namespace {

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

json group_json(const FgAbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    j["torsion"] = json::array();
    for (const auto& d : g.torsion) j["torsion"].push_back(json_int(d));
    return j;
}

json mat2_json(const Mat2& m) {
    return json::array({json::array({json_int(m.a), json_int(m.b)}),
                        json::array({json_int(m.c), json_int(m.d)})});
}

json vec2_json(const Vec2& x) { return json::array({json_int(x[0]), json_int(x[1])}); }

json jacobi_json(const JacobiEl& g) {
    json j;
    j["matrix"] = mat2_json(g.m);
    j["vector"] = vec2_json(g.x);
    return j;
}

json mcg_json(const McgEl& x) {
    json j = jacobi_json(x.g);
    j["charge"] = json_int(x.k);
    return j;
}

json report_json(const CheckReport& r) {
    json j;
    j["suite"] = r.suite;
    j["ok"] = r.ok();
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["ok"] = c.ok;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(cj);
    }
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

IntMat parse_matrix_option(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--sigma is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError("--sigma must be a JSON array of rows");
    IntMat m;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw UsageError("--sigma rows must be nonempty JSON arrays");
        m.emplace_back();
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw UsageError("--sigma entries must be integers");
            m.back().push_back(Int(e.get<std::int64_t>()));
        }
        if (m.back().size() != m.front().size())
            throw UsageError("--sigma rows must all have the same length");
    }
    if (m.size() != m.front().size()) throw UsageError("--sigma must be square");
    return m;
}

CheckReport suite_by_name(const std::string& name) {
    if (name == "lemma1") return verify_lemma1();
    if (name == "lemma6") return verify_lemma6();
    if (name == "amalgam") return verify_amalgam();
    if (name == "claim1") return verify_claim1();
    if (name == "claim3") return verify_claim3();
    if (name == "theorem3") return verify_theorem3();
    if (name == "eq7") return verify_eq7();
    if (name == "sdiff-h28") return verify_sdiff_h28();
    if (name == "cocycles") return verify_cocycles();
    if (name == "mu") return verify_mu();
    throw UsageError("unknown suite '" + name + "'");
}

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names = {"lemma1", "lemma6",  "amalgam",   "claim1",
                                                   "claim3", "theorem3", "eq7",      "sdiff-h28",
                                                   "cocycles", "mu"};
    return names;
}

json cocycle_result_json(const std::string& name, const CocycleCheckResult& res) {
    json j;
    j["name"] = name;
    j["ok"] = res.ok;
    j["cases"] = res.cases;
    if (res.failure) {
        json w;
        w["g"] = res.failure->g;
        w["h"] = res.failure->h;
        w["k"] = res.failure->k;
        w["lhs"] = json_int(res.failure->lhs);
        w["rhs"] = json_int(res.failure->rhs);
        j["witness"] = w;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact group, cocycle, and cohomology computations for the "
                 "product-of-spheres mapping-class toolkit"};
    app.require_subcommand(1);

    // ---- word eval ----
    auto* word = app.add_subcommand("word", "word-model operations");
    word->require_subcommand(1);
    auto* weval = word->add_subcommand("eval", "evaluate a word in one of the models");
    std::string weval_group = "diffeo";
    std::string weval_order = "group";
    std::string weval_word;
    weval->add_option("--group", weval_group, "model: diffeo, sl2, jacobi, mcg")
        ->check(CLI::IsMember({"diffeo", "sl2", "jacobi", "mcg"}));
    weval->add_option("--order", weval_order,
                      "group: product as written; chain: leftmost acts first")
        ->check(CLI::IsMember({"group", "chain"}));
    weval->add_option("word", weval_word, "e.g. \"Y U^-1 A^3\" (\"1\" = identity)")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    verify
        ->add_option("--suite", suite,
                     "lemma1, lemma6, amalgam, claim1, claim3, theorem3, eq7, sdiff-h28, "
                     "cocycles, mu, or all")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma6", "amalgam", "claim1", "claim3", "theorem3",
                               "eq7", "sdiff-h28", "cocycles", "mu", "all"}));

    // ---- abelianize ----
    auto* ab = app.add_subcommand("abelianize", "abelianization of a presentation");
    std::string ab_target;
    long long ab_m = 1, ab_n = -1;
    ab->add_option("target", ab_target,
                   "presentation file path, builtin name (gammaJ, G2, G4, G6, H28), or E "
                   "(extension family, see --m/--n)")
        ->required();
    ab->add_option("--m", ab_m, "E only: exponent on the commutator relator (default 1)");
    ab->add_option("--n", ab_n, "E only: exponent on the braid-power relator (default -1)");

    // ---- cohomology ----
    auto* coh = app.add_subcommand("cohomology", "cohomology computations");
    std::string coh_target;
    long long coh_m = 0;
    std::string coh_sigma;
    long long coh_trivial_rank = 0;
    coh->add_option("target", coh_target,
                    "gamma-z28, sl2-h2, gamma, gm, cyclic, bar, or homology-h2")
        ->required()
        ->check(CLI::IsMember(
            {"gamma-z28", "sl2-h2", "gamma", "gm", "cyclic", "bar", "homology-h2"}));
    coh->add_option("--m", coh_m, "group order (gm: 2, 4 or 6; cyclic/bar: any m >= 1)");
    coh->add_option("--sigma", coh_sigma,
                    "cyclic/bar: action matrix as a JSON array of rows, e.g. \"[[0,-1],[1,0]]\"");
    coh->add_option("--trivial-rank", coh_trivial_rank,
                    "cyclic/bar: use the trivial action on Z^r instead of --sigma");

    // ---- cocycle check ----
    auto* coc = app.add_subcommand("cocycle", "cocycle operations");
    coc->require_subcommand(1);
    auto* ccheck = coc->add_subcommand("check", "verify a named cocycle's identity");
    std::string coc_name;
    long long coc_m = 12;
    long long coc_bound = 3;
    long long coc_samples = 500;
    std::uint64_t coc_seed = 0;
    ccheck->add_option("--name", coc_name, "fm, fsl2, g, phi, omega1, omega2, or omega3")
        ->required()
        ->check(CLI::IsMember({"fm", "fsl2", "g", "phi", "omega1", "omega2", "omega3"}));
    ccheck->add_option("--m", coc_m, "fm only: the modulus (default 12)");
    ccheck->add_option("--exhaustive-bound", coc_bound,
                       "g/phi: coordinate box half-width (default 3)");
    ccheck->add_option("--samples", coc_samples, "sampled checks: number of triples (default 500)");
    ccheck->add_option("--seed", coc_seed, "sampled checks: RNG seed (default 0)");

    // ---- mcg mul / order ----
    auto* mc = app.add_subcommand("mcg", "extension-group element operations");
    mc->require_subcommand(1);
    auto* mmul = mc->add_subcommand("mul", "evaluate one word or multiply two");
    std::vector<std::string> mul_words;
    mmul->add_option("words", mul_words, "one or two words over Y, U, A, B, S")
        ->required()
        ->expected(1, 2);
    auto* morder = mc->add_subcommand("order", "order of an element (null when none found)");
    std::string order_word;
    long long order_bound = 1000;
    morder->add_option("word", order_word, "word over Y, U, A, B, S")->required();
    morder->add_option("--bound", order_bound, "largest exponent tried (default 1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (weval->parsed()) {
            std::vector<WordToken> toks = parse_word_tokens(weval_word);
            if (weval_order == "chain") std::reverse(toks.begin(), toks.end());
            if (weval_group == "diffeo") {
                DiffeoPair d = eval_group_word(toks);
                json j;
                j["w1"] = free_word_to_string(d.w1);
                j["w2"] = free_word_to_string(d.w2);
                emit(j);
            } else if (weval_group == "sl2") {
                json j;
                j["matrix"] = mat2_json(eval_matrix_word(toks));
                emit(j);
            } else if (weval_group == "jacobi") {
                emit(jacobi_json(eval_jacobi_word(toks)));
            } else {
                emit(mcg_json(eval_mcg_word(toks)));
            }
            return 0;
        }
        if (verify->parsed()) {
            if (suite == "all") {
                json j;
                j["suites"] = json::array();
                bool ok = true;
                for (const auto& name : all_suites()) {
                    CheckReport r = suite_by_name(name);
                    ok = ok && r.ok();
                    j["suites"].push_back(report_json(r));
                }
                j["ok"] = ok;
                emit(j);
                return ok ? 0 : 1;
            }
            CheckReport r = suite_by_name(suite);
            emit(report_json(r));
            return r.ok() ? 0 : 1;
        }
        if (ab->parsed()) {
            Presentation p;
            if (ab_target == "E") {
                p = extension_presentation(ab_m, ab_n);
            } else if (std::ifstream in{ab_target}; in.good()) {
                std::ostringstream buf;
                buf << in.rdbuf();
                p = parse_presentation(buf.str());
            } else {
                p = builtin_presentation(ab_target);
            }
            emit(group_json(abelianize_presentation(p)));
            return 0;
        }
        if (coh->parsed()) {
            if (coh_target == "gamma-z28") {
                emit(group_json(h2_z28()));
            } else if (coh_target == "sl2-h2") {
                MvSl2Result r = mv_h2_sl2();
                json j;
                j["h2"] = group_json(r.h2);
                j["h3"] = group_json(r.h3);
                j["kernel_generator"] =
                    json::array({r.kernel_generator[0], r.kernel_generator[1]});
                emit(j);
            } else if (coh_target == "gamma") {
                MvGammaResult r = mv_gamma();
                json j;
                j["h2"] = group_json(r.h2);
                j["h3"] = group_json(r.h3);
                emit(j);
            } else if (coh_target == "gm") {
                if (coh_m == 0) throw UsageError("cohomology gm requires --m (2, 4 or 6)");
                emit(group_json(lhs_h2_gm(static_cast<int>(coh_m))));
            } else if (coh_target == "homology-h2") {
                MvGammaResult r = mv_gamma();
                UctResult u = uct_homology(r.h2, r.h3, abelianization_of("gammaJ"));
                json j;
                j["h2_homology"] = group_json(u.h2_homology);
                j["consistent"] = u.consistent;
                emit(j);
                return u.consistent ? 0 : 1;
            } else {
                if (coh_m <= 0)
                    throw UsageError("cohomology " + coh_target + " requires --m >= 1");
                IntMat sigma;
                if (!coh_sigma.empty()) {
                    sigma = parse_matrix_option(coh_sigma);
                } else if (coh_trivial_rank > 0) {
                    sigma = mat_identity(static_cast<std::size_t>(coh_trivial_rank));
                } else {
                    throw UsageError("cohomology " + coh_target +
                                     " requires --sigma or --trivial-rank");
                }
                if (coh_target == "cyclic") {
                    CyclicCohomology c = cyclic_cohomology(coh_m, sigma);
                    json j;
                    j["h0"] = group_json(c.h0);
                    j["heven"] = group_json(c.heven);
                    j["hodd"] = group_json(c.hodd);
                    emit(j);
                } else {
                    BarCohomology b = bar_cohomology(coh_m, sigma);
                    json j;
                    j["h1"] = group_json(b.h1);
                    j["h2"] = group_json(b.h2);
                    emit(j);
                }
            }
            return 0;
        }
        if (ccheck->parsed()) {
            json j;
            CocycleCheckResult res{true, 0, std::nullopt};
            if (coc_name == "fm") {
                if (coc_m < 2) throw UsageError("cocycle check --name fm requires --m >= 2");
                long m = static_cast<long>(coc_m);
                res = check_cocycle_zm(
                    m, [m](const Int& p, const Int& q) { return f_m(m, p, q); });
                j = cocycle_result_json("fm", res);
                j["modulus"] = m;
                j["mode"] = "exhaustive";
            } else if (coc_name == "g" || coc_name == "phi") {
                if (coc_bound < 1)
                    throw UsageError("cocycle check requires --exhaustive-bound >= 1");
                res = check_cocycle_vec2_box(coc_name == "g" ? g_z2 : phi_z2,
                                             static_cast<long>(coc_bound));
                j = cocycle_result_json(coc_name, res);
                j["bound"] = coc_bound;
                j["mode"] = "exhaustive-box";
            } else {
                if (coc_samples < 1) throw UsageError("cocycle check requires --samples >= 1");
                long modulus = coc_name == "omega3" ? 28 : 0;
                JacobiCocycle w = coc_name == "fsl2"
                                      ? JacobiCocycle([](const JacobiEl& g, const JacobiEl& h) {
                                            return f_sl2(g.m, h.m);
                                        })
                                      : cocycle_by_name(coc_name);
                res = check_cocycle_jacobi_sampled(w, static_cast<long>(coc_samples), coc_seed,
                                                   modulus);
                j = cocycle_result_json(coc_name, res);
                j["samples"] = coc_samples;
                j["seed"] = coc_seed;
                if (modulus > 0) j["modulus"] = modulus;
                j["mode"] = "sampled";
            }
            emit(j);
            return res.ok ? 0 : 1;
        }
        if (mmul->parsed()) {
            McgEl x = eval_mcg_word(parse_word_tokens(mul_words[0]));
            if (mul_words.size() == 2)
                x = mcg_mul(x, eval_mcg_word(parse_word_tokens(mul_words[1])));
            emit(mcg_json(x));
            return 0;
        }
        if (morder->parsed()) {
            if (order_bound < 1) throw UsageError("mcg order requires --bound >= 1");
            McgEl x = eval_mcg_word(parse_word_tokens(order_word));
            auto n = element_order(x, static_cast<long>(order_bound));
            json j;
            j["element"] = mcg_json(x);
            j["order"] = n ? json(*n) : json(nullptr);
            j["bound"] = order_bound;
            emit(j);
            return 0;
        }
        std::cerr << "error: no command selected\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
