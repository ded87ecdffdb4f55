// Command-line front end. Every command is pure: fixed inputs and budgets
// produce byte-identical output. JSON (default) or CSV goes to stdout,
// diagnostics to stderr. Exit codes: 0 answered, 1 usage error, 2 budget
// exceeded, 3 certificate verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "echcap/bounds.hpp"
#include "echcap/capacity.hpp"
#include "echcap/enumerate.hpp"
#include "echcap/errors.hpp"
#include "echcap/obstruct.hpp"
#include "echcap/serialize.hpp"

namespace {

using ech::Json;
using ech::Rational;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitBadCertificate = 3;

void emit(const Json& doc) {
    std::cout << doc.dump() << "\n";
}

std::vector<ech::ConvexGenerator> parse_gens(const std::vector<std::string>& specs) {
    std::vector<ech::ConvexGenerator> out;
    for (const auto& spec : specs) {
        std::size_t start = 0;
        while (start <= spec.size()) {
            const std::size_t semi = spec.find(';', start);
            const std::string piece =
                spec.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            const auto first = piece.find_first_not_of(' ');
            if (first != std::string::npos) {
                const auto last = piece.find_last_not_of(' ');
                out.push_back(ech::ConvexGenerator::parse(piece.substr(first, last - first + 1)));
            }
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
    }
    return out;
}

std::vector<Rational> parse_grid(const std::string& points, const std::string& range) {
    std::vector<Rational> grid;
    if (!points.empty()) {
        std::size_t start = 0;
        while (start <= points.size()) {
            const std::size_t comma = points.find(',', start);
            grid.push_back(Rational::parse(points.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return grid;
    }
    // "start:stop:step"
    const std::size_t c1 = range.find(':');
    const std::size_t c2 = range.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw ech::ParseError("grid must be 'start:stop:step' or use --points");
    }
    const Rational start = Rational::parse(range.substr(0, c1));
    const Rational stop = Rational::parse(range.substr(c1 + 1, c2 - c1 - 1));
    const Rational step = Rational::parse(range.substr(c2 + 1));
    if (step.sign() <= 0) throw ech::ParseError("grid step must be positive");
    for (Rational a = start; a <= stop; a += step) grid.push_back(a);
    return grid;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ECH capacities and symplectic embedding obstructions for convex toric domains"};
    app.require_subcommand(1);

    std::string domain_text;
    std::string target_text;
    std::string gen_text;
    std::vector<std::string> gens_text;
    std::string family_text = "ball";
    std::string format = "json";
    std::string cert_file;
    std::string domain_family_text;
    std::string points_text;
    std::string grid_text;
    std::string tol_text = "1/1000";
    std::int64_t k = 0;
    int dmax = 4;
    int n_factors = 2;
    std::int64_t max_index = 6;
    std::uint64_t budget = 0;
    int jobs = 0;
    bool extended = false;
    bool conjectural = false;
    std::string method = "search";

    auto* cap = app.add_subcommand("capacity", "k-th capacity of a domain");
    cap->add_option("--domain", domain_text, "domain literal, e.g. P(2,1)")->required();
    cap->add_option("--k", k, "capacity index")->required();
    cap->add_option("--method", method, "search | oracle | both (oracle: P/E only)");
    cap->add_option("--budget", budget, "search node budget");

    auto* minimal = app.add_subcommand("minimal", "unique minimal generator, if any");
    minimal->add_option("--domain", domain_text)->required();
    minimal->add_option("--k", k)->required();
    minimal->add_option("--budget", budget);

    auto* index = app.add_subcommand("index", "lattice data of a generator");
    index->add_option("--gen", gen_text)->required();
    index->add_flag("--extended", extended, "allow repeated h factors");

    auto* action = app.add_subcommand("action", "action of a generator under a domain");
    action->add_option("--domain", domain_text)->required();
    action->add_option("--gen", gen_text)->required();

    auto* check = app.add_subcommand("check", "embedding obstruction verdict");
    check->add_option("--domain", domain_text)->required();
    check->add_option("--target", target_text)->required();
    check->add_option("--gens", gens_text, "target generators (repeat or ';'-separate)")
        ->required();
    check->add_flag("--conjectural", conjectural, "relax minimality to all-e (conditional)");
    check->add_option("--budget", budget);

    auto* verify = app.add_subcommand("verify-certificate", "re-check an emitted certificate");
    verify->add_option("--file", cert_file, "certificate JSON (default: stdin)");

    auto* bound = app.add_subcommand("bound", "exclusion threshold for a target family");
    bound->add_option("--domain", domain_text)->required();
    bound->add_option("--family", family_text, "ball | ellipsoid:b | square | polydisk:b");
    bound->add_option("--dmax", dmax, "largest target degree");
    bound->add_option("--tol", tol_text, "threshold tolerance");
    bound->add_flag("--conjectural", conjectural);
    bound->add_option("--budget", budget);

    auto* scan_cmd = app.add_subcommand("scan", "threshold table over a parameter grid");
    scan_cmd->add_option("--domain-family", domain_family_text,
                         "domain literal with 'a' as the parameter, e.g. P(a,1)")
        ->required();
    scan_cmd->add_option("--points", points_text, "comma-separated parameter values");
    scan_cmd->add_option("--grid", grid_text, "start:stop:step");
    scan_cmd->add_option("--family", family_text);
    scan_cmd->add_option("--dmax", dmax);
    scan_cmd->add_option("--tol", tol_text);
    scan_cmd->add_option("--format", format, "json | csv");
    scan_cmd->add_option("--jobs", jobs, "worker threads (default: cores)");
    scan_cmd->add_option("--budget", budget);

    auto* enumerate = app.add_subcommand("enumerate", "factorizations or low-index generators");
    enumerate->add_option("--gen", gen_text, "generator to factor (with --n)");
    enumerate->add_option("--n", n_factors, "number of factors");
    enumerate->add_option("--max-index", max_index, "list all generators with index <= bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap->parsed()) {
            if (method != "search" && method != "oracle" && method != "both") {
                throw ech::ParseError("unknown --method '" + method + "'");
            }
            const auto domain = ech::ToricDomain::parse(domain_text);
            Json out{{"schema", "echcap.capacity/1"}, {"domain", domain.str()}, {"k", k}};
            ech::SearchBudget sb;
            if (budget) sb.nodes = budget;
            if (method != "oracle") {
                out["c"] = ech::capacity(domain, k, sb).str();
            }
            if (method != "search") {
                Rational oracle(0);
                if (domain.kind() == ech::DomainKind::ellipsoid) {
                    oracle = ech::capacity_oracle_ellipsoid(domain.param_a(), domain.param_b(), k);
                } else if (domain.kind() == ech::DomainKind::polydisk) {
                    oracle = ech::capacity_oracle_polydisk(domain.param_a(), domain.param_b(), k);
                } else {
                    throw ech::Error("closed-form oracle needs a polydisk or ellipsoid");
                }
                out["oracle"] = oracle.str();
                if (method == "both") out["agree"] = out["c"] == out["oracle"];
            }
            emit(out);
        } else if (minimal->parsed()) {
            const auto domain = ech::ToricDomain::parse(domain_text);
            ech::SearchBudget sb;
            if (budget) sb.nodes = budget;
            const auto found = ech::find_minimal_generator(domain, k, sb);
            Json out{{"schema", "echcap.minimal/1"},
                     {"domain", domain.str()},
                     {"k", k},
                     {"c", ech::capacity(domain, k, sb).str()}};
            out["generator"] = found ? Json(found->str()) : Json(nullptr);
            emit(out);
        } else if (index->parsed()) {
            const auto g = ech::ConvexGenerator::parse(gen_text, extended);
            emit(Json{{"schema", "echcap.index/1"},
                      {"generator", g.str()},
                      {"I", g.ech_index()},
                      {"J0", g.j_zero()},
                      {"L", g.lattice_count()},
                      {"x", g.x()},
                      {"y", g.y()},
                      {"m", g.total_multiplicity()},
                      {"h", g.h_count()}});
        } else if (action->parsed()) {
            const auto domain = ech::ToricDomain::parse(domain_text);
            const auto g = ech::ConvexGenerator::parse(gen_text);
            emit(Json{{"schema", "echcap.action/1"},
                      {"domain", domain.str()},
                      {"generator", g.str()},
                      {"action", domain.action(g).str()}});
        } else if (check->parsed()) {
            const auto domain = ech::ToricDomain::parse(domain_text);
            const auto target = ech::ToricDomain::parse(target_text);
            ech::SearchOptions options;
            options.conjectural_mode = conjectural;
            if (budget) options.node_budget = budget;
            const auto verdict =
                ech::check_embedding(domain, target, parse_gens(gens_text), options);
            emit(ech::verdict_to_json(verdict, domain, target));
        } else if (verify->parsed()) {
            Json doc;
            if (cert_file.empty()) {
                doc = Json::parse(std::cin);
            } else {
                std::ifstream in(cert_file);
                if (!in) throw ech::Error("cannot open " + cert_file);
                doc = Json::parse(in);
            }
            const auto cert = ech::certificate_from_json(doc);
            const auto err = ech::certificate_error(cert);
            if (err) {
                emit(Json{{"schema", "echcap.verify/1"}, {"valid", false}, {"error", *err}});
                return kExitBadCertificate;
            }
            emit(Json{{"schema", "echcap.verify/1"}, {"valid", true}});
        } else if (bound->parsed()) {
            const auto domain = ech::ToricDomain::parse(domain_text);
            const auto family = ech::TargetFamily::parse(family_text);
            ech::SearchOptions options;
            options.conjectural_mode = conjectural;
            if (budget) options.node_budget = budget;
            const auto result = ech::exclusion_threshold(
                domain, family, family.target_recipe(dmax), Rational::parse(tol_text), options);
            Json out{{"schema", "echcap.bound/1"},
                     {"domain", domain.str()},
                     {"family", family.str()},
                     {"dmax", dmax},
                     {"tol", Rational::parse(tol_text).str()},
                     {"conditional", conjectural}};
            out.update(ech::threshold_to_json(result));
            emit(out);
        } else if (scan_cmd->parsed()) {
            const auto family = ech::TargetFamily::parse(family_text);
            const auto domain_family = ech::parse_domain_family(domain_family_text);
            const auto grid = parse_grid(points_text, grid_text);
            ech::SearchOptions options;
            options.conjectural_mode = conjectural;
            if (budget) options.node_budget = budget;
            const int thread_count =
                jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
            const auto rows = ech::scan(domain_family, grid, family, dmax,
                                        Rational::parse(tol_text), options, thread_count);
            if (format == "csv") {
                std::cout << "a,c_lower,c_lower_approx,binding_target,volume_floor_sq,"
                             "meets_volume_floor\n";
                for (const auto& row : rows) {
                    std::cout << csv_escape(row.a.str()) << ","
                              << csv_escape(row.bound.threshold.str()) << ","
                              << row.bound.threshold.to_double() << ","
                              << csv_escape(row.bound.binding_target.str()) << ","
                              << csv_escape(row.volume_floor_sq.str()) << ","
                              << (row.threshold_meets_volume_floor ? "true" : "false") << "\n";
                }
            } else if (format == "json") {
                for (const auto& row : rows) {
                    Json out{{"schema", "echcap.scan-row/1"}, {"a", row.a.str()}};
                    out.update(ech::threshold_to_json(row.bound));
                    out["volume_floor_sq"] = row.volume_floor_sq.str();
                    out["meets_volume_floor"] = row.threshold_meets_volume_floor;
                    emit(out);
                }
            } else {
                throw ech::ParseError("unknown --format '" + format + "'");
            }
        } else if (enumerate->parsed()) {
            if (!gen_text.empty()) {
                const auto g = ech::ConvexGenerator::parse(gen_text);
                Json tuples = Json::array();
                for (const auto& tuple : ech::factorizations(g, n_factors)) {
                    Json one = Json::array();
                    for (const auto& f : tuple) one.push_back(f.str());
                    tuples.push_back(std::move(one));
                }
                emit(Json{{"schema", "echcap.factorizations/1"},
                          {"generator", g.str()},
                          {"n", n_factors},
                          {"factorizations", std::move(tuples)}});
            } else {
                Json list = Json::array();
                for (const auto& g : ech::generators_with_index_up_to(max_index)) {
                    list.push_back(Json{{"generator", g.str()}, {"I", g.ech_index()}});
                }
                emit(Json{{"schema", "echcap.generators/1"},
                          {"max_index", max_index},
                          {"generators", std::move(list)}});
            }
        }
    } catch (const ech::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
