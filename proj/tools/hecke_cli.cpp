#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/arith.hpp"
#include "hecke/census.hpp"
#include "hecke/characters.hpp"
#include "hecke/config.hpp"
#include "hecke/expsums.hpp"
#include "hecke/modforms.hpp"
#include "hecke/petersson.hpp"
#include "hecke/traces.hpp"
#include "hecke/verify.hpp"

using json = nlohmann::json;
using namespace hecke;

// every emitted object must carry its schema tag and the listed keys
static void check_schema(const json& j, std::initializer_list<const char*> keys) {
    if (!j.contains("schema")) throw std::logic_error("output missing schema tag");
    for (auto* k : keys)
        if (!j.contains(k)) throw std::logic_error(std::string("output missing key: ") + k);
}

static void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

static json rational_json(const Rational& r) {
    return json{{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

int main(int argc, char** argv) {
    CLI::App app{"hecke: exponential sums, Petersson averages, Hecke traces and curve censuses"};
    app.require_subcommand(1);

    auto& cfg = config();
    app.add_option("--trunc", cfg.trunc_C, "Petersson c-sum cutoff (0 = automatic)");
    app.add_option("--precision", cfg.precision, "q-expansion length");
    app.add_option("--tolerance", cfg.tolerance, "identity-check tolerance");
    app.add_option("--jobs", cfg.jobs, "worker threads");
    app.add_option("--seed", cfg.seed, "seed for sampled verification grids");
    app.add_option("--format", cfg.format, "output format: json|csv");

    // characters --modulus N
    int64_t ch_N = 1;
    auto* sub_chars = app.add_subcommand("characters", "list the character group mod N");
    sub_chars->add_option("--modulus", ch_N, "modulus")->required();

    // kloosterman --a --b --c [--char-modulus --char-index]
    int64_t kl_a = 0, kl_b = 0, kl_c = 1, kl_cm = 0, kl_ci = 0;
    auto* sub_kl = app.add_subcommand("kloosterman", "twisted Kloosterman sum and its Weil bound");
    sub_kl->add_option("--a", kl_a)->required();
    sub_kl->add_option("--b", kl_b)->required();
    sub_kl->add_option("--c", kl_c)->required();
    sub_kl->add_option("--char-modulus", kl_cm, "modulus of the twist (must divide c)");
    sub_kl->add_option("--char-index", kl_ci, "character index within the group");

    // delta --kappa --level --m --n [--char-index] [--star] [--trunc]
    int de_kappa = 4;
    int64_t de_N = 1, de_m = 1, de_n = 1, de_ci = 0;
    bool de_star = false;
    auto* sub_delta = app.add_subcommand("delta", "Petersson geometric side / newform average");
    sub_delta->add_option("--kappa", de_kappa)->required();
    sub_delta->add_option("--level", de_N)->required();
    sub_delta->add_option("--m", de_m)->required();
    sub_delta->add_option("--n", de_n)->required();
    sub_delta->add_option("--char-index", de_ci);
    sub_delta->add_flag("--star", de_star, "newform average instead of the full-level delta");

    // trace --kappa --level --m [--char-index]
    int tr_kappa = 12;
    int64_t tr_N = 1, tr_m = 1, tr_ci = 0;
    auto* sub_trace = app.add_subcommand("trace", "trace main term, envelopes and exact value");
    sub_trace->add_option("--kappa", tr_kappa)->required();
    sub_trace->add_option("--level", tr_N)->required();
    sub_trace->add_option("--m", tr_m)->required();
    sub_trace->add_option("--char-index", tr_ci);

    // x0 --level --p --v
    int64_t x0_N = 11, x0_p = 2;
    int x0_v = 1;
    auto* sub_x0 = app.add_subcommand("x0", "modular-curve point count predictor");
    sub_x0->add_option("--level", x0_N)->required();
    sub_x0->add_option("--p", x0_p)->required();
    sub_x0->add_option("--v", x0_v);

    // census --q Q [--dump]
    int64_t ce_q = 5;
    bool ce_dump = false;
    auto* sub_census = app.add_subcommand("census", "weighted census of curves over F_q");
    sub_census->add_option("--q", ce_q)->required();
    sub_census->add_flag("--dump", ce_dump, "CSV of curve records");

    // moments --q --j --n1 --n2
    int64_t mo_q = 101, mo_n1 = 1, mo_n2 = 1;
    int mo_j = 0;
    auto* sub_mom = app.add_subcommand("moments", "census moment against its main term");
    sub_mom->add_option("--q", mo_q)->required();
    sub_mom->add_option("--j", mo_j)->required();
    sub_mom->add_option("--n1", mo_n1);
    sub_mom->add_option("--n2", mo_n2);

    // oracle --form delta|level11 --op eigenvalues|norm --limit P
    std::string or_form = "delta", or_op = "eigenvalues";
    int64_t or_limit = 0;  // 0 = derive from --precision
    auto* sub_oracle = app.add_subcommand("oracle", "exact eigenform data");
    sub_oracle->add_option("--form", or_form, "delta|level11");
    sub_oracle->add_option("--op", or_op, "eigenvalues|norm");
    sub_oracle->add_option("--limit", or_limit, "coefficient bound / truncation length");

    // verify <suite>
    std::string ve_suite = "all";
    auto* sub_verify = app.add_subcommand("verify", "run identity suites");
    sub_verify->add_option("suite", ve_suite, "all|characters|expsums|analytic|petersson|modforms|traces|census");

    // defaults
    auto* sub_defaults = app.add_subcommand("defaults", "machine-readable configuration dump");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sub_chars) {
            auto grp = chars::CharacterGroup::make(ch_N);
            json arr = json::array();
            for (int64_t i = 0; i < grp->order(); i++) {
                auto c = grp->character(i);
                json values = json::array();
                for (int64_t a = 1; a <= ch_N; a++) {
                    cplx v = c.eval(a);
                    values.push_back(json{{"re", v.real()}, {"im", v.imag()}});
                }
                arr.push_back(json{{"index", i},
                                   {"exponents", c.exponents()},
                                   {"conductor", c.conductor()},
                                   {"parity", c.parity()},
                                   {"values", values}});
            }
            json out{{"schema", "hecke/characters/1"}, {"modulus", ch_N}, {"characters", arr}};
            check_schema(out, {"modulus", "characters"});
            emit(out);
        } else if (*sub_kl) {
            cplx v;
            double wb;
            if (kl_cm > 0) {
                auto grp = chars::CharacterGroup::make(kl_cm);
                auto chi = grp->character(kl_ci);
                v = expsums::twisted_kloosterman(chi, kl_a, kl_b, kl_c);
                wb = expsums::weil_bound(chi, kl_a, kl_b, kl_c);
            } else {
                v = expsums::kloosterman(kl_a, kl_b, kl_c);
                wb = expsums::weil_bound_classical(kl_a, kl_b, kl_c);
            }
            json out{{"schema", "hecke/kloosterman/1"},
                     {"value_re", v.real()},
                     {"value_im", v.imag()},
                     {"weil_bound", wb},
                     {"exact", false}};
            check_schema(out, {"value_re", "value_im", "weil_bound"});
            emit(out);
        } else if (*sub_delta) {
            auto grp = chars::CharacterGroup::make(de_N);
            auto chi = grp->character(de_ci);
            petersson::DeltaValue dv;
            if (de_star) {
                petersson::StarOptions so;
                so.C_main = cfg.trunc_C;
                so.C_sub = cfg.trunc_C;
                dv = petersson::delta_star(de_kappa, de_N, chi, de_m, de_n, so);
            } else {
                dv = petersson::delta_geometric(de_kappa, de_N, chi, de_m, de_n, cfg.trunc_C);
            }
            json out{{"schema", "hecke/delta/1"},
                     {"kappa", de_kappa},
                     {"level", de_N},
                     {"char_index", de_ci},
                     {"m", de_m},
                     {"n", de_n},
                     {"star", de_star},
                     {"value_re", dv.value.real()},
                     {"value_im", dv.value.imag()},
                     {"tail_bound", dv.tail_bound},
                     {"truncation_c", dv.truncation_c}};
            check_schema(out, {"value_re", "value_im", "tail_bound", "truncation_c"});
            emit(out);
        } else if (*sub_trace) {
            auto grp = chars::CharacterGroup::make(tr_N);
            auto chi = grp->character(tr_ci);
            cplx main = traces::main_term_mt1(tr_kappa, tr_N, chi, tr_m);
            auto env = traces::error_envelopes(tr_kappa, tr_N, chi, tr_m);
            json out{{"schema", "hecke/trace/1"},
                     {"kappa", tr_kappa},
                     {"level", tr_N},
                     {"m", tr_m},
                     {"main_term_re", main.real()},
                     {"main_term_im", main.imag()},
                     {"envelopes",
                      {{"trivial", env.trivial_bound},
                       {"eichler_selberg", env.eichler_selberg},
                       {"petersson", env.petersson},
                       {"petersson_regime", env.petersson_regime},
                       {"constants", "ineffective, set to 1"}}}};
            auto ex = traces::exact_trace_small(tr_kappa, tr_N, tr_m);
            out["exact_available"] = bool(ex);
            if (ex) {
                out["exact_unnormalized"] = ex->unnormalized.str();
                out["exact_normalized"] = ex->normalized();
            }
            check_schema(out, {"main_term_re", "envelopes", "exact_available"});
            emit(out);
        } else if (*sub_x0) {
            auto pr = traces::x0_predict(x0_N, x0_p, x0_v);
            json out{{"schema", "hecke/x0/1"},
                     {"level", x0_N},
                     {"p", x0_p},
                     {"v", x0_v},
                     {"q", pr.q},
                     {"predictor", pr.main},
                     {"envelope", pr.envelope},
                     {"envelope_constant", "ineffective, set to 1"}};
            if (x0_N == 11 && x0_v == 1 && x0_p != 11)
                out["exact"] = traces::x0_exact_11(x0_p);
            check_schema(out, {"predictor", "envelope"});
            emit(out);
        } else if (*sub_census) {
            const auto& recs = census::census_of(ce_q);
            if (ce_dump) {
                std::printf("q,a,b,t,aut,n1,n2\n");
                for (auto& r : recs)
                    std::printf("%lld,%lld,%lld,%lld,%d,%lld,%lld\n", (long long)r.q,
                                (long long)r.a, (long long)r.b, (long long)r.t, r.aut,
                                (long long)r.n1, (long long)r.n2);
            } else {
                Rational mass(0);
                for (auto& r : recs) mass += Rational(1, bigint(r.aut));
                json out{{"schema", "hecke/census/1"},
                         {"q", ce_q},
                         {"classes", recs.size()},
                         {"weighted_mass", rational_json(mass)},
                         {"mass_equals_q", mass == Rational(bigint(ce_q))}};
                check_schema(out, {"q", "classes", "weighted_mass"});
                emit(out);
            }
        } else if (*sub_mom) {
            auto mo = census::moment(mo_q, mo_j, mo_n1, mo_n2);
            json out{{"schema", "hecke/moment/1"},
                     {"q", mo_q},
                     {"j", mo_j},
                     {"n1", mo_n1},
                     {"n2", mo_n2},
                     {"expectation", mo.expectation},
                     {"exact", mo_j == 0},
                     {"expectation_exact", rational_json(mo.expectation_exact)},
                     {"v_main", rational_json(mo.v_main)},
                     {"deviation", mo.deviation}};
            check_schema(out, {"expectation", "v_main", "deviation", "exact"});
            emit(out);
        } else if (*sub_oracle) {
            modforms::Form f;
            if (or_form == "delta")
                f = modforms::Form::Delta;
            else if (or_form == "level11")
                f = modforms::Form::Level11;
            else
                throw CLI::ValidationError("oracle", "--form must be delta or level11");
            if (or_limit <= 0) or_limit = or_op == "norm" ? cfg.precision / 2 : 30;
            if (or_op == "eigenvalues") {
                auto& nf = modforms::oracle_form(f, (int)or_limit + 1);
                json eig = json::array();
                for (int64_t n = 1; n <= or_limit; n++)
                    eig.push_back(json{{"n", n},
                                       {"a", nf.expansion().coeff(n).str()},
                                       {"lambda", nf.lambda(n)}});
                json out{{"schema", "hecke/oracle/1"},
                         {"form", or_form},
                         {"level", nf.level()},
                         {"weight", nf.weight()},
                         {"exact", true},
                         {"eigenvalues", eig}};
                check_schema(out, {"form", "eigenvalues", "exact"});
                emit(out);
            } else {
                auto& nf = modforms::oracle_form(f, (int)(2 * or_limit));
                auto nr = modforms::petersson_norm(nf, or_limit);
                json out{{"schema", "hecke/oracle/1"},
                         {"form", or_form},
                         {"norm", nr.norm},
                         {"error_bar", nr.error_bar},
                         {"error_bar_kind", "heuristic ratio-of-truncations"},
                         {"L_ad2", nr.L_ad2},
                         {"X", nr.X}};
                check_schema(out, {"form", "norm", "error_bar"});
                emit(out);
            }
        } else if (*sub_verify) {
            auto rep = verify::run_suite(ve_suite);
            if (cfg.format == "json")
                std::cout << rep.render_json() << "\n";
            else
                std::cout << rep.render_text();
            return rep.all_pass() ? 0 : 1;
        } else if (*sub_defaults) {
            json out{{"schema", "hecke/defaults/1"},
                     {"trunc", cfg.trunc_C},
                     {"precision", cfg.precision},
                     {"tolerance", cfg.tolerance},
                     {"jobs", cfg.jobs},
                     {"seed", cfg.seed},
                     {"format", cfg.format},
                     {"certified_divisor_bound", cfg.certified_divisor_bound},
                     {"character_modulus_cap", cfg.character_modulus_cap},
                     {"census_q_cap", cfg.census_q_cap}};
            check_schema(out, {"trunc", "precision", "tolerance", "jobs", "seed"});
            emit(out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
