// qloop: run verification suites and emit matrices or q-character series.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qloop/json_io.hpp"
#include "qloop/suites.hpp"

using namespace qloop;

namespace {

std::set<std::string> split_list(const std::string& s)
{
    std::set<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

int write_out(const std::string& doc, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << doc;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "qloop: cannot open " << path << "\n";
        return 2;
    }
    f << doc;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for sl2-hat Borel modules, R-matrices and q-characters"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json", out, strategy = "exact", suites;
    SuiteConfig cfg;
    app.add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->envname("QLOOP_FORMAT")
        ->capture_default_str();
    app.add_option("--out", out, "output file (default stdout)")->envname("QLOOP_OUT");

    auto* run = app.add_subcommand("run-suites", "run verification suites; exit status 0 iff every check passes");
    run->add_option("--trunc", cfg.trunc, "truncation of infinite modules")->envname("QLOOP_TRUNC")->capture_default_str();
    run->add_option("--depth", cfg.depth, "q-character depth")->envname("QLOOP_DEPTH")->capture_default_str();
    run->add_option("--u-order", cfg.u_order, "u-order of the universal R expansion")
        ->envname("QLOOP_U_ORDER")
        ->capture_default_str();
    run->add_option("--seed", cfg.seed, "seed for specialization points")->envname("QLOOP_SEED")->capture_default_str();
    run->add_option("--strategy", strategy, "exact or spec:N")->envname("QLOOP_STRATEGY")->capture_default_str();
    run->add_option("--suite", suites, "comma-separated subset of relations,rmatrix,stable,qchar,twist,negative")
        ->envname("QLOOP_SUITE");
    run->add_option("--jobs", cfg.jobs, "suites run concurrently")->envname("QLOOP_JOBS")->capture_default_str();

    BuildParams bp;
    std::string builder;
    auto* em = app.add_subcommand("emit-matrix", "serialize a named matrix builder");
    em->add_option("builder", builder, "builder name")->required()->check(CLI::IsMember(matrix_builders()));
    em->add_option("--k", bp.k)->capture_default_str();
    em->add_option("--ell", bp.ell)->capture_default_str();
    em->add_option("--trunc", bp.trunc)->envname("QLOOP_TRUNC")->capture_default_str();
    em->add_option("--u-order", bp.u_order)->envname("QLOOP_U_ORDER")->capture_default_str();
    auto* poles = em->add_flag("--poles", "emit the pole scan instead of the matrix");

    auto* eq = app.add_subcommand("emit-qchar", "serialize a truncated q-character");
    eq->add_option("builder", builder, "builder name")->required()->check(CLI::IsMember(qchar_builders()));
    eq->add_option("--k", bp.k)->capture_default_str();
    eq->add_option("--shift", bp.shift)->capture_default_str();
    eq->add_option("--depth", bp.depth)->envname("QLOOP_DEPTH")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            parse_strategy(strategy, cfg);
            if (!suites.empty()) cfg.suites = split_list(suites);
            validate(cfg);
            Report rep = run_suites(cfg);
            std::string doc = format == "json" ? to_json(rep).dump(2) + "\n" : format == "csv" ? to_csv(rep) : to_text(rep);
            int st = write_out(doc, out);
            if (st) return st;
            std::size_t failed = 0;
            for (const auto& c : rep) failed += !c.pass;
            std::cerr << rep.size() - failed << "/" << rep.size() << " checks passed\n";
            return all_pass(rep) ? 0 : 1;
        }
        if (*em) {
            Mat m = emit_matrix(builder, bp);
            std::string doc;
            if (*poles) {
                auto ps = pole_scan(m);
                doc = format == "json" ? json(ps).dump() + "\n" : pole_scan_csv(ps);
            } else {
                doc = format == "json" ? to_json(m).dump(2) + "\n" : format == "csv" ? to_csv(m) : to_text(m);
            }
            return write_out(doc, out);
        }
        if (*eq) {
            if (bp.depth < 0) throw ConfigError("depth must be >= 0");
            QCharSeries s = emit_qchar(builder, bp);
            std::string doc = format == "json" ? to_json(s).dump(2) + "\n" : format == "csv" ? to_csv(s) : s.str();
            return write_out(doc, out);
        }
    } catch (const ConfigError& e) {
        std::cerr << "qloop: invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qloop: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
