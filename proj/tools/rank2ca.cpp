// rank2ca — exact computations in rank-2 cluster algebras: mutations,
// denominator vectors, mutation invariants, and the Diophantine equations
// they encode. All output is deterministic; errors print their name on the
// first line and exit 1; usage problems exit 2.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rank2/diophantine.hpp"
#include "rank2/dvector.hpp"
#include "rank2/engine.hpp"
#include "rank2/errors.hpp"
#include "rank2/exchange_matrix.hpp"
#include "rank2/expr.hpp"
#include "rank2/invariants.hpp"

using nlohmann::json;
using namespace rank2;

namespace {

std::string lf_text(const LaurentFraction& lf) { return to_ratfunc(lf).str(); }

Rational parse_rational_arg(const std::string& text) {
    const RationalFunction f = parse_ratfunc(text);
    if (!f.is_constant()) throw PreconditionViolated("expected a rational constant");
    return f.constant_value();
}

json dvector_json(const DVector& v) {
    return json::array({v.e1.get_str(), v.e2.get_str()});
}

json pair_json(const IntPair& p) {
    auto num = [](const Integer& z) -> json {
        if (z.fits_slong_p()) return z.get_si();
        return z.get_str();
    };
    return json::array({num(p.first), num(p.second)});
}

struct MutateCmd {
    long m = 0, n = 0;
    std::string word;
    bool maction = false;
    bool as_json = false;

    int run() const {
        if (maction) {
            std::pair<LaurentFraction, LaurentFraction> cur{lf_var(1), lf_var(2)};
            std::vector<std::pair<std::string, std::string>> steps{
                {lf_text(cur.first), lf_text(cur.second)}};
            for (char c : word) {
                if (c != '1' && c != '2')
                    throw PreconditionViolated("words are strings over {1,2}");
                cur = m_action_laurent(cur, c - '0', m, n);
                steps.emplace_back(lf_text(cur.first), lf_text(cur.second));
            }
            if (as_json) {
                json out{{"m", m}, {"n", n}, {"word", word}};
                out["pairs"] = json::array();
                for (const auto& [f, g] : steps)
                    out["pairs"].push_back(json::array({f, g}));
                std::cout << out.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < steps.size(); ++i)
                    std::cout << "step" << i << ": (" << steps[i].first << ", "
                              << steps[i].second << ")\n";
            }
            return 0;
        }
        const auto seeds = walk(m, n, word);
        if (as_json) {
            json out{{"m", m}, {"n", n}, {"word", word}};
            out["seeds"] = json::array();
            for (const Seed& s : seeds)
                out["seeds"].push_back({{"position", s.position},
                                        {"var1", lf_text(s.var1)},
                                        {"var2", lf_text(s.var2)},
                                        {"sign", s.exchange.sign}});
            std::cout << out.dump() << "\n";
        } else {
            for (const Seed& s : seeds)
                std::cout << "t" << s.position << ": (" << lf_text(s.var1) << ", "
                          << lf_text(s.var2) << ")\n";
        }
        return 0;
    }
};

struct ClustersCmd {
    long m = 0, n = 0, max_steps = 64;
    bool as_json = false;

    int run() const {
        const ClusterEnumeration e = enumerate_clusters(m, n, max_steps);
        if (as_json) {
            json out{{"m", m}, {"n", n}};
            out["period"] = e.period ? json(*e.period) : json(nullptr);
            out["clusters"] = json::array();
            for (const Seed& s : e.labeled_clusters)
                out["clusters"].push_back(
                    json::array({lf_text(s.var1), lf_text(s.var2)}));
            std::cout << out.dump() << "\n";
        } else {
            for (const Seed& s : e.labeled_clusters)
                std::cout << "(" << lf_text(s.var1) << ", " << lf_text(s.var2)
                          << ")\n";
            if (e.period)
                std::cout << "period: " << *e.period << "\n";
            else
                std::cout << "period: none\n";
        }
        return 0;
    }
};

struct DvectorsCmd {
    long m = 0, n = 0, kmax = 8, k = 1;
    bool closed_form = false, check_cluster = false, growth = false,
         do_classify = false, as_json = false;

    int run() const {
        if (do_classify) {
            std::cout << "type: " << to_string(classify(m, n)) << "\n";
            return 0;
        }
        if (growth) {
            std::cout << "growth: " << (check_growth(m, n, kmax) ? "true" : "false")
                      << "\n";
            return 0;
        }
        if (check_cluster) {
            std::cout << "match: "
                      << (check_dvector_vs_cluster(m, n, kmax) ? "true" : "false")
                      << "\n";
            return 0;
        }
        if (closed_form) {
            const ClosedQuad q = dvectors_closed_form(m, n, k);
            if (as_json) {
                json out{{"m", m}, {"n", n}, {"k", k}};
                out["even"] = json::array({dvector_json(q.d1_even),
                                           dvector_json(q.d2_even)});
                out["odd"] = json::array({dvector_json(q.d1_odd),
                                          dvector_json(q.d2_odd)});
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "t" << 2 * k << ": [" << q.d1_even.e1 << ","
                          << q.d1_even.e2 << "] [" << q.d2_even.e1 << ","
                          << q.d2_even.e2 << "]\n";
                std::cout << "t" << 2 * k + 1 << ": [" << q.d1_odd.e1 << ","
                          << q.d1_odd.e2 << "] [" << q.d2_odd.e1 << ","
                          << q.d2_odd.e2 << "]\n";
            }
            return 0;
        }
        const auto rows = dvectors_recurrence(m, n, kmax);
        if (as_json) {
            json table = json::object();
            for (const DvRow& r : rows)
                table[std::to_string(r.position)] =
                    json::array({dvector_json(r.v1), dvector_json(r.v2)});
            json out{{"m", m}, {"n", n}, {"dvectors", table}};
            std::cout << out.dump() << "\n";
        } else {
            for (const DvRow& r : rows)
                std::cout << "t" << r.position << ": [" << r.v1.e1 << "," << r.v1.e2
                          << "] [" << r.v2.e1 << "," << r.v2.e2 << "]\n";
        }
        return 0;
    }
};

struct VerifyCmd {
    long m = 0, n = 0;
    std::string expr;
    bool as_json = false;

    int run() const {
        const RationalFunction t = parse_ratfunc(expr);
        const bool ok = verify_invariant(t, m, n);
        if (as_json) {
            std::cout << json{{"m", m},
                              {"n", n},
                              {"expr", print_canonical(t)},
                              {"invariant", ok}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "invariant: " << (ok ? "true" : "false") << "\n";
        }
        return 0;
    }
};

struct ConstructCmd {
    long m = 0, n = 0;
    std::string f_expr = "X1";
    std::string phi = "p1";
    std::string phi_scale = "1";
    std::string phi_expr;
    bool as_json = false;

    int run() const {
        const RationalFunction f =
            to_ratfunc(parse_with_vars(f_expr, {"X1", "X2"}));
        SymmetricCombiner combiner = SymmetricCombiner::power_sum(1);
        if (!phi_expr.empty()) {
            const ClusterEnumeration e = enumerate_clusters(m, n, 16);
            if (!e.period)
                throw InfiniteType("explicit combiners need a finite cluster list");
            const long arity = static_cast<long>(e.labeled_clusters.size());
            std::vector<std::string> vars;
            for (long i = 1; i <= arity; ++i) vars.push_back("X" + std::to_string(i));
            combiner = SymmetricCombiner::explicit_poly(
                to_multipoly(parse_with_vars(phi_expr, vars), arity));
        } else {
            if (phi.size() < 2 || (phi[0] != 'p' && phi[0] != 'e'))
                throw PreconditionViolated(
                    "--phi must be p<k> (power sum) or e<k> (elementary)");
            const long index = std::stol(phi.substr(1));
            const Rational scale = parse_rational_arg(phi_scale);
            combiner = phi[0] == 'p' ? SymmetricCombiner::power_sum(index, scale)
                                     : SymmetricCombiner::elementary(index, scale);
        }
        const RationalFunction t = construct_invariant(m, n, f, combiner);
        if (as_json)
            std::cout << json{{"m", m}, {"n", n}, {"invariant", print_canonical(t)}}
                             .dump()
                      << "\n";
        else
            std::cout << print_canonical(t) << "\n";
        return 0;
    }
};

struct SearchCmd {
    long m = 0, n = 0, s = 1, t = 1;
    long s_max = 0, t_max = 0;
    int threads = 1;
    bool as_json = false;

    int run() const {
        std::vector<std::pair<long, long>> grid;
        if (s_max > 0 || t_max > 0) {
            const long sm = s_max > 0 ? s_max : s;
            const long tm = t_max > 0 ? t_max : t;
            for (long ss = 1; ss <= sm; ++ss)
                for (long tt = 1; tt <= tm; ++tt) grid.emplace_back(ss, tt);
        } else {
            grid.emplace_back(s, t);
        }

        std::vector<std::vector<InvariantCandidate>> results(grid.size());
        const int workers = std::max(1, threads);
        if (workers > 1 && grid.size() > 1) {
            std::vector<std::thread> pool;
            std::size_t next = 0;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < grid.size(); i += workers)
                        results[i] = search_laurent_invariants(
                            m, n, grid[i].first, grid[i].second);
                });
            }
            for (auto& th : pool) th.join();
            (void)next;
        } else {
            for (std::size_t i = 0; i < grid.size(); ++i)
                results[i] =
                    search_laurent_invariants(m, n, grid[i].first, grid[i].second);
        }

        if (as_json) {
            json out{{"m", m}, {"n", n}};
            out["results"] = json::array();
            for (std::size_t i = 0; i < grid.size(); ++i) {
                json entry{{"s", grid[i].first}, {"t", grid[i].second}};
                entry["basis"] = json::array();
                for (const auto& cand : results[i]) {
                    json c{{"expr", print_canonical(cand.value)}};
                    if (cand.laurent) {
                        c["s"] = cand.laurent->s;
                        c["t"] = cand.laurent->t;
                    }
                    entry["basis"].push_back(std::move(c));
                }
                out["results"].push_back(std::move(entry));
            }
            std::cout << out.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                std::cout << "s=" << grid[i].first << " t=" << grid[i].second
                          << " dimension: " << results[i].size() << "\n";
                for (std::size_t b = 0; b < results[i].size(); ++b) {
                    const auto& cand = results[i][b];
                    std::cout << "basis[" << b
                              << "]: " << print_canonical(cand.value);
                    if (cand.laurent)
                        std::cout << "  [s=" << cand.laurent->s
                                  << ", t=" << cand.laurent->t << "]";
                    std::cout << "\n";
                }
            }
        }
        return 0;
    }
};

struct DecomposeCmd {
    std::string expr;
    bool half = false;
    int var = 0;
    bool as_json = false;

    int run() const {
        const RationalFunction f = parse_ratfunc(expr);
        if (half) {
            const int v = var ? var : detect_single_variable(f);
            const Polynomial g = decompose_half_invariant(f, v);
            if (as_json)
                std::cout << json{{"g", g.str("X", "")}}.dump() << "\n";
            else
                std::cout << "g(X) = " << g.str("X", "") << "\n";
        } else {
            const Polynomial g = decompose_a1a1(f);
            if (as_json)
                std::cout << json{{"G", g.str("X1", "X2")}}.dump() << "\n";
            else
                std::cout << "G(X1, X2) = " << g.str("X1", "X2") << "\n";
        }
        return 0;
    }
};

struct DioCommon {
    std::string preset;
    std::string expr;
    long m = 0, n = 0;
    std::string initial = "1,1";
    long long bound = 100;
    int threads = 1;

    DioEquation equation() const {
        if (!preset.empty()) return dio_preset(preset);
        if (expr.empty())
            throw PreconditionViolated("either --preset or --expr is required");
        std::istringstream in(initial);
        long a = 0, b = 0;
        char comma = 0;
        in >> a >> comma >> b;
        if (comma != ',' || a < 1 || b < 1)
            throw PreconditionViolated("--initial expects 'a,b' with a,b >= 1");
        return make_dio_equation("custom", parse_ratfunc(expr), m, n,
                                 {Integer(a), Integer(b)});
    }
};

struct DioSolveCmd : DioCommon {
    bool as_json = false;

    int run() const {
        const DioEquation eq = equation();
        const Integer big_bound(static_cast<long>(bound));
        if (as_json) {
            const Orbit orbit = enumerate_orbit(eq, big_bound);
            json out{{"equation", eq.name},
                     {"m", eq.m},
                     {"n", eq.n},
                     {"level", str(eq.level)},
                     {"bound", bound},
                     {"complete_within_bound", orbit.closed}};
            out["solutions"] = json::array();
            for (const OrbitNode& node : orbit.nodes)
                out["solutions"].push_back(
                    {{"pair", pair_json(node.pair)}, {"word", node.word}});
            std::cout << out.dump() << "\n";
        } else {
            const auto pairs = orbit_walk_order(eq, big_bound);
            for (const IntPair& p : pairs)
                std::cout << "(" << p.first << "," << p.second << ")\n";
            std::cout << "solutions: " << pairs.size() << "\n";
        }
        return 0;
    }
};

struct DioCertifyCmd : DioCommon {
    bool descent = false;
    bool as_json = false;

    int run() const {
        const DioEquation eq = equation();
        const Integer big_bound(static_cast<long>(bound));
        const Orbit orbit = enumerate_orbit(eq, big_bound);
        const auto brute = brute_force_solutions(eq, big_bound, threads);
        std::vector<IntPair> orbit_pairs;
        for (const auto& node : orbit.nodes) orbit_pairs.push_back(node.pair);
        std::sort(orbit_pairs.begin(), orbit_pairs.end());
        std::vector<IntPair> sorted_brute = brute;
        std::sort(sorted_brute.begin(), sorted_brute.end());
        const bool complete = orbit_pairs == sorted_brute;

        if (as_json) {
            json out{{"equation", eq.name},
                     {"bound", bound},
                     {"complete_within_bound", complete},
                     {"orbit_closed", orbit.closed}};
            out["orbit"] = json::array();
            for (const IntPair& p : orbit_pairs) out["orbit"].push_back(pair_json(p));
            out["brute_force"] = json::array();
            for (const IntPair& p : sorted_brute)
                out["brute_force"].push_back(pair_json(p));
            std::cout << out.dump() << "\n";
            return 0;
        }

        std::cout << "orbit: " << orbit.nodes.size() << "\n";
        std::cout << "brute-force: " << brute.size() << "\n";
        std::cout << "complete within bound " << bound << ": "
                  << (complete ? "true" : "false") << "\n";
        if (!orbit.closed)
            std::cout << "note: orbit pruned at the bound (not a closed orbit)\n";

        if (descent) {
            if (eq.name != "14")
                throw PreconditionViolated("--descent applies to the 14 preset");
            long checked = 0;
            bool all_ok = true;
            for (const IntPair& p : brute) {
                if (p.first == 1 || p.second == 1) continue;
                const DescentReport report = check_descent(p);
                all_ok = all_ok && report.ok;
                ++checked;
            }
            std::cout << "descent: " << (all_ok ? "ok" : "FAILED") << " (" << checked
                      << " checked)\n";
            return all_ok ? 0 : 1;
        }
        return 0;
    }
};

struct ImrCmd {
    std::string matrix;
    long depth = 8;
    long mutate_at = 0;
    bool as_json = false;

    ExchangeMatrix parse_matrix() const {
        const json j = json::parse(matrix);
        std::vector<std::vector<long>> rows;
        for (const auto& row : j) {
            rows.emplace_back();
            for (const auto& v : row) rows.back().push_back(v.get<long>());
        }
        return ExchangeMatrix::from_rows(rows);
    }

    int run() const {
        const ExchangeMatrix b = parse_matrix();
        if (mutate_at > 0) {
            const ExchangeMatrix mutated = matrix_mutate(b, mutate_at);
            json out = json::array();
            for (long i = 0; i < mutated.size(); ++i) {
                json row = json::array();
                for (long j = 0; j < mutated.size(); ++j)
                    row.push_back(mutated.at(i, j).get_si());
                out.push_back(std::move(row));
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        const ImrReport report = check_imr(b, depth);
        if (as_json) {
            std::cout << json{{"imr", report.imr},
                              {"depth", depth},
                              {"matrices_seen", report.matrices_seen}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "imr: " << (report.imr ? "true" : "false") << "\n";
            std::cout << "checked depth: " << depth << "\n";
        }
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-2 cluster algebra toolkit"};
    app.require_subcommand(1);

    MutateCmd mutate_cmd;
    auto* mutate = app.add_subcommand("mutate", "walk mutations or M-actions");
    mutate->add_option("--m", mutate_cmd.m)->required();
    mutate->add_option("--n", mutate_cmd.n)->required();
    mutate->add_option("--word", mutate_cmd.word);
    mutate->add_flag("--maction", mutate_cmd.maction);
    mutate->add_flag("--json", mutate_cmd.as_json);

    ClustersCmd clusters_cmd;
    auto* clusters = app.add_subcommand("clusters", "enumerate labeled clusters");
    clusters->add_option("--m", clusters_cmd.m)->required();
    clusters->add_option("--n", clusters_cmd.n)->required();
    clusters->add_option("--max-steps", clusters_cmd.max_steps);
    clusters->add_flag("--json", clusters_cmd.as_json);

    DvectorsCmd dvectors_cmd;
    auto* dvectors = app.add_subcommand("dvectors", "denominator vectors");
    dvectors->add_option("--m", dvectors_cmd.m)->required();
    dvectors->add_option("--n", dvectors_cmd.n)->required();
    dvectors->add_option("--kmax", dvectors_cmd.kmax);
    dvectors->add_option("--k", dvectors_cmd.k);
    dvectors->add_flag("--closed-form", dvectors_cmd.closed_form);
    dvectors->add_flag("--check-cluster", dvectors_cmd.check_cluster);
    dvectors->add_flag("--growth", dvectors_cmd.growth);
    dvectors->add_flag("--classify", dvectors_cmd.do_classify);
    dvectors->add_flag("--json", dvectors_cmd.as_json);

    VerifyCmd verify_cmd;
    auto* verify = app.add_subcommand("verify", "verify a mutation invariant");
    verify->add_option("--m", verify_cmd.m)->required();
    verify->add_option("--n", verify_cmd.n)->required();
    verify->add_option("--expr", verify_cmd.expr)->required();
    verify->add_flag("--json", verify_cmd.as_json);

    ConstructCmd construct_cmd;
    auto* construct =
        app.add_subcommand("construct", "build an invariant from (phi, F)");
    construct->add_option("--m", construct_cmd.m)->required();
    construct->add_option("--n", construct_cmd.n)->required();
    construct->add_option("--F", construct_cmd.f_expr);
    construct->add_option("--phi", construct_cmd.phi);
    construct->add_option("--phi-scale", construct_cmd.phi_scale);
    construct->add_option("--phi-expr", construct_cmd.phi_expr);
    construct->add_flag("--json", construct_cmd.as_json);

    SearchCmd search_cmd;
    auto* search = app.add_subcommand("search", "search Laurent invariants");
    search->add_option("--m", search_cmd.m)->required();
    search->add_option("--n", search_cmd.n)->required();
    search->add_option("--s", search_cmd.s);
    search->add_option("--t", search_cmd.t);
    search->add_option("--s-max", search_cmd.s_max);
    search->add_option("--t-max", search_cmd.t_max);
    search->add_option("--threads", search_cmd.threads);
    search->add_flag("--json", search_cmd.as_json);

    DecomposeCmd decompose_cmd;
    auto* decompose =
        app.add_subcommand("decompose", "decompose a (0,0) Laurent invariant");
    decompose->add_option("--expr", decompose_cmd.expr)->required();
    decompose->add_flag("--half", decompose_cmd.half);
    decompose->add_option("--var", decompose_cmd.var);
    decompose->add_flag("--json", decompose_cmd.as_json);

    DioSolveCmd dio_solve_cmd;
    auto* dio_solve = app.add_subcommand("dio-solve", "enumerate solutions");
    dio_solve->add_option("--preset", dio_solve_cmd.preset);
    dio_solve->add_option("--expr", dio_solve_cmd.expr);
    dio_solve->add_option("--m", dio_solve_cmd.m);
    dio_solve->add_option("--n", dio_solve_cmd.n);
    dio_solve->add_option("--initial", dio_solve_cmd.initial);
    dio_solve->add_option("--bound", dio_solve_cmd.bound);
    dio_solve->add_option("--threads", dio_solve_cmd.threads);
    dio_solve->add_flag("--json", dio_solve_cmd.as_json);

    DioCertifyCmd dio_certify_cmd;
    auto* dio_certify =
        app.add_subcommand("dio-certify", "certify completeness within a bound");
    dio_certify->add_option("--preset", dio_certify_cmd.preset);
    dio_certify->add_option("--expr", dio_certify_cmd.expr);
    dio_certify->add_option("--m", dio_certify_cmd.m);
    dio_certify->add_option("--n", dio_certify_cmd.n);
    dio_certify->add_option("--initial", dio_certify_cmd.initial);
    dio_certify->add_option("--bound", dio_certify_cmd.bound);
    dio_certify->add_option("--threads", dio_certify_cmd.threads);
    dio_certify->add_flag("--descent", dio_certify_cmd.descent);
    dio_certify->add_flag("--json", dio_certify_cmd.as_json);

    ImrCmd imr_cmd;
    auto* imr = app.add_subcommand("imr-check", "invariant-mutation-rule check");
    imr->add_option("--matrix", imr_cmd.matrix)->required();
    imr->add_option("--depth", imr_cmd.depth);
    imr->add_option("--mutate-at", imr_cmd.mutate_at);
    imr->add_flag("--json", imr_cmd.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*mutate) return mutate_cmd.run();
        if (*clusters) return clusters_cmd.run();
        if (*dvectors) return dvectors_cmd.run();
        if (*verify) return verify_cmd.run();
        if (*construct) return construct_cmd.run();
        if (*search) return search_cmd.run();
        if (*decompose) return decompose_cmd.run();
        if (*dio_solve) return dio_solve_cmd.run();
        if (*dio_certify) return dio_certify_cmd.run();
        if (*imr) return imr_cmd.run();
    } catch (const Error& e) {
        std::cout << e.name() << "\n" << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cout << "InvalidJson\n" << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << "InternalError\n" << e.what() << "\n";
        return 1;
    }
    return 2;
}
