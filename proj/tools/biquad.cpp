// Command-line front end: analyze | pbw | normalize | calculus | catalog.
// Exit codes: 0 success, 1 analysis-level failure (invalid or inconsistent
// presentation), 2 parse/usage error.

#include "biquad/catalog.hpp"
#include "biquad/format.hpp"
#include "biquad/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace biquad;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// A target is a presentation file path, or a catalog entry name as fallback.
AlgebraPresentation load_target(const std::string& target) {
    std::ifstream in(target);
    if (in) {
        std::ostringstream os;
        os << in.rdbuf();
        AlgebraPresentation pres = parse_presentation(os.str());
        if (pres.name.empty()) pres.name = target;
        return pres;
    }
    return catalog_get(target);
}

void emit(const Report& report, const std::string& format) {
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact PBW and differential-calculus toolkit for bi-quadratic algebras"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string format = "text";
    std::string word_text, strategy = "leftmost";
    std::string catalog_name;
    bool list_entries = false;
    int depth = 4;

    auto* analyze_cmd = app.add_subcommand("analyze", "decide differential smoothness");
    analyze_cmd->add_option("files", files, "presentation files or catalog names")->required();
    analyze_cmd->add_option("--depth", depth, "verification depth")->capture_default_str();
    analyze_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* pbw_cmd = app.add_subcommand("pbw", "check PBW consistency");
    pbw_cmd->add_option("files", files, "presentation files or catalog names")->required();
    pbw_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* normalize_cmd = app.add_subcommand("normalize", "rewrite a word to normal form");
    normalize_cmd->add_option("file", files, "presentation file or catalog name")
        ->required()
        ->expected(1);
    normalize_cmd->add_option("--word", word_text, "word, e.g. \"x2^2 x1\"")->required();
    normalize_cmd->add_option("--strategy", strategy, "leftmost|rightmost")
        ->check(CLI::IsMember({"leftmost", "rightmost"}));

    auto* calculus_cmd = app.add_subcommand("calculus", "verify the differential calculus");
    calculus_cmd->add_option("file", files, "presentation file or catalog name")
        ->required()
        ->expected(1);
    calculus_cmd->add_option("--degree", depth, "verification depth")->capture_default_str();
    calculus_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "list or dump built-in algebras");
    catalog_cmd->add_option("name", catalog_name, "entry to print");
    catalog_cmd->add_flag("--list", list_entries, "list entry names");

    CLI11_PARSE(app, argc, argv);

    // Batch targets are processed independently; the exit code is the worst
    // outcome across files.
    if (analyze_cmd->parsed()) {
        int exit_code = 0;
        for (const auto& f : files) {
            Timer timer;
            try {
                AlgebraPresentation pres = load_target(f);
                Report report = make_report_header(pres);
                report.depth = depth;
                try {
                    report.pbw = check_pbw_by_overlaps(pres);
                    report.verdict = analyze(pres, depth);
                } catch (const InconsistentPresentation& e) {
                    report.pbw = e.report;
                    report.total_ms = timer.ms();
                    emit(report, format);
                    std::cerr << f << ": presentation has no PBW basis\n";
                    exit_code = std::max(exit_code, 1);
                    continue;
                }
                report.total_ms = timer.ms();
                emit(report, format);
            } catch (const std::exception& e) {
                std::cerr << f << ": " << e.what() << "\n";
                exit_code = 2;
            }
        }
        return exit_code;
    }

    if (pbw_cmd->parsed()) {
        int exit_code = 0;
        for (const auto& f : files) {
            Timer timer;
            try {
                AlgebraPresentation pres = load_target(f);
                Report report = make_report_header(pres);
                report.pbw = check_pbw_by_overlaps(pres);
                if (pres.n == 3) report.pbw3 = check_pbw3_conditions(pres);
                report.total_ms = timer.ms();
                emit(report, format);
            } catch (const std::exception& e) {
                std::cerr << f << ": " << e.what() << "\n";
                exit_code = 2;
            }
        }
        return exit_code;
    }

    if (normalize_cmd->parsed()) {
        AlgebraPresentation pres = load_target(files.at(0));
        Word w = parse_word(word_text, pres.n);
        Strategy strat = strategy == "rightmost" ? Strategy::rightmost : Strategy::leftmost;
        std::cout << to_string(normalize(w, pres, strat), pres.n) << "\n";
        return 0;
    }

    if (calculus_cmd->parsed()) {
        Timer timer;
        AlgebraPresentation pres = load_target(files.at(0));
        auto violations = validate(pres);
        if (!violations.empty()) throw ValidationError(std::move(violations));
        Report report = make_report_header(pres);
        report.depth = depth;
        report.pbw = check_pbw_by_overlaps(pres);
        if (!report.pbw->consistent) {
            report.total_ms = timer.ms();
            emit(report, format);
            std::cerr << files.at(0) << ": presentation has no PBW basis\n";
            return 1;
        }
        SmoothnessVerdict v;
        v.gkdim = pres.n;
        v.conditions = sufficiency_conditions(pres);
        auto forced = derive_forced_twists(pres);
        if (std::holds_alternative<Obstruction>(forced)) {
            v.status = SmoothStatus::not_smooth;
            v.obstruction = std::get<Obstruction>(forced);
        } else {
            TwistFamily tw = std::get<TwistFamily>(forced);
            v.verification = verify_witness(pres, tw, depth);
            v.status = v.verification->pass() ? SmoothStatus::smooth : SmoothStatus::undetermined;
            if (v.status == SmoothStatus::smooth) v.witness = std::move(tw);
        }
        report.verdict = std::move(v);
        report.total_ms = timer.ms();
        emit(report, format);
        return 0;
    }

    if (catalog_cmd->parsed()) {
        if (!catalog_name.empty()) {
            std::cout << catalog_text(catalog_name);
        } else {
            for (const auto& name : catalog_names()) std::cout << name << "\n";
        }
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const biquad::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const biquad::ValidationError& e) {
        for (const auto& v : e.violations) std::cerr << "error: " << v << "\n";
        return 2;
    } catch (const biquad::UnknownName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const biquad::InconsistentPresentation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
