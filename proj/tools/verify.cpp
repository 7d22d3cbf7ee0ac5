#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heunlie/suite.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Heun operators of Lie type"};
    std::string config_path;
    std::vector<std::string> suites;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format;
    bool timings = false;
    app.add_option("--config", config_path, "JSON configuration file")->required();
    app.add_option("--suite", suites, "Suite to run (repeatable): lie, heun, omega, hahn-map, dual, gyrostat, "
                                      "families, conjugations, all");
    app.add_option("--seed", seed, "Seed for the random r draws");
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timings", timings, "Include per-entry elapsed microseconds (output is then not reproducible)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    heunlie::SuiteConfig cfg;
    try {
        std::ifstream in(config_path);
        if (!in) throw heunlie::ConfigError("", "cannot read " + config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        cfg = heunlie::parse_config(buf.str());
        for (const auto& s : suites)
            if (!heunlie::is_suite_name(s)) throw heunlie::ConfigError("--suite", "unknown suite '" + s + "'");
    } catch (const heunlie::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    if (!suites.empty()) cfg.suites = suites;
    if (seed) cfg.seed = *seed;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (format == "json") cfg.format = heunlie::ReportFormat::Json;
    if (format == "text") cfg.format = heunlie::ReportFormat::Text;
    cfg.timings = timings;

    heunlie::Report rep = heunlie::run(cfg);
    std::string text = rep.render(cfg.format);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << cfg.out_path << "\n";
            return kExitConfig;
        }
        out << text;
    }
    std::cerr << rep.count(heunlie::Status::Pass) << " pass, " << rep.count(heunlie::Status::Fail) << " fail, "
              << rep.count(heunlie::Status::Anomaly) << " anomaly\n";
    return rep.ok() ? 0 : kExitFail;
}
