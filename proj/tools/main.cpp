// fleetcap: fleet capacity analytics for the 1993-2005 inshore panel.
//
// Subcommands: measure (per-year DEA capacity tables), fit (capacity and
// utilization increment equations), simulate / sweep (per-ton capacity tax
// scenarios), report (figure data series), validate (data-quality report).
// Exit codes: 0 success, 1 usage, 2 data, 3 numerical.

#include "CLI11.hpp"

#include "fleetcap/dea.hpp"
#include "fleetcap/errors.hpp"
#include "fleetcap/fixtures.hpp"
#include "fleetcap/report.hpp"
#include "fleetcap/tax_sim.hpp"
#include "fleetcap/validation.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace fs = std::filesystem;
using namespace fleetcap;

namespace {

struct CommonOpts {
    std::string input;
    std::string out = "out";
    bool seed_data = false;
    std::string format = "csv";
    int start_year = 0;
    int end_year = 0;
    std::vector<double> rates;
    std::string coeffs = "refit";
    bool plots = false;
};

void add_io_flags(CLI::App* cmd, CommonOpts& opts, bool with_years = true) {
    cmd->add_option("--input", opts.input, "Input CSV path");
    cmd->add_option("--out", opts.out, "Output directory")->capture_default_str();
    cmd->add_flag("--seed-data", opts.seed_data, "Use the bundled 1993-2005 fixtures");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (with_years) {
        cmd->add_option("--start-year", opts.start_year, "First year to process");
        cmd->add_option("--end-year", opts.end_year, "Last year to process");
    }
}

OutputFormat parse_format(const CommonOpts& opts) {
    return opts.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

const char* table_ext(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

// All artifacts are buffered and flushed only after the whole command
// succeeded, so a failing run leaves no partial outputs behind.
class OutputSet {
public:
    std::ostringstream& add(const std::string& name) {
        files_.emplace_back(name, std::ostringstream{});
        return files_.back().second;
    }

    void flush(const std::string& dir) {
        fs::create_directories(dir);
        for (auto& [name, content] : files_) {
            const fs::path path = fs::path(dir) / name;
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out) throw DataError("cannot write " + path.string());
            out << content.str();
        }
    }

private:
    std::vector<std::pair<std::string, std::ostringstream>> files_;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

void require_one_source(const CommonOpts& opts) {
    if (opts.seed_data == !opts.input.empty())
        throw UsageError("exactly one of --input and --seed-data is required");
}

std::vector<YearPanel> load_panels(const CommonOpts& opts) {
    require_one_source(opts);
    std::vector<YearPanel> panels;
    if (opts.seed_data) {
        panels = load_bundled_panel();
    } else {
        auto in = open_input(opts.input);
        panels = load_panel(in);
    }
    std::erase_if(panels, [&](const YearPanel& p) {
        return (opts.start_year && p.year < opts.start_year) ||
               (opts.end_year && p.year > opts.end_year);
    });
    if (panels.empty()) throw DataError("no panel records in the selected year range");
    return panels;
}

NationalSeries load_series(const CommonOpts& opts) {
    require_one_source(opts);
    if (opts.seed_data) return load_bundled_national();
    auto in = open_input(opts.input);
    auto inputs = load_national(in);
    if (inputs.empty()) throw DataError("no national rows in " + opts.input);
    return derive_national_series(inputs);
}

TaxBase parse_base(const std::string& base) {
    return base == "simulated" ? TaxBase::SimulatedCapacity : TaxBase::ActualCapacity;
}

struct Models {
    CapacityEquation czl;
    UtilizationEquation uzl;
};

Models resolve_models(const CommonOpts& opts, const NationalSeries& series) {
    if (opts.coeffs == "printed")
        return {printed_capacity_equation(), printed_utilization_equation()};
    return {fit_capacity_equation(series).equation,
            fit_utilization_equation(series).equation};
}

std::string rate_tag(double rate) {
    std::string s = format_ratio(rate);
    for (char& c : s)
        if (c == '.') c = '_';
    return s;
}

int cmd_measure(const CommonOpts& opts) {
    auto panels = load_panels(opts);
    auto tables = capacity_series(panels);
    const OutputFormat fmt = parse_format(opts);

    OutputSet outputs;
    write_capacity_tables(outputs.add(std::string("capacity_tables.") + table_ext(fmt)),
                          tables, fmt);
    write_peer_weights(outputs.add("peer_weights.csv"), tables, panels);

    std::vector<NationalInput> national;
    const NationalSeries* bundled = nullptr;
    NationalSeries bundled_storage;
    if (opts.seed_data) {
        bundled_storage = load_bundled_national();
        bundled = &bundled_storage;
    }
    for (const auto& table : tables) {
        NationalInput row;
        row.year = table.year;
        row.catch_t = table.total_catch_t;
        row.capacity_t = table.total_capacity_t;
        if (bundled)
            if (const NationalRow* b = bundled->find(table.year))
                row.income_yuan = b->income_yuan;
        national.push_back(row);
    }
    write_national_series(outputs.add(std::string("national_series.") + table_ext(fmt)),
                          derive_national_series(national), fmt);
    outputs.flush(opts.out);
    return 0;
}

int cmd_fit(const CommonOpts& opts) {
    const NationalSeries series = load_series(opts);
    PdlModel capacity = fit_capacity_equation(series);
    CompoundDiffModel utilization = fit_utilization_equation(series);
    const OutputFormat fmt = parse_format(opts);

    OutputSet outputs;
    write_equations_report(
        outputs.add(std::string("equations.") + (fmt == OutputFormat::Csv ? "txt" : "json")),
        capacity, utilization, fmt);
    outputs.flush(opts.out);
    return 0;
}

int cmd_simulate(const CommonOpts& opts, const std::string& base) {
    const NationalSeries series = load_series(opts);
    const Models models = resolve_models(opts, series);
    const auto inputs = simulation_inputs(series);
    const OutputFormat fmt = parse_format(opts);
    if (opts.rates.empty()) throw UsageError("simulate requires --rates");

    OutputSet outputs;
    for (double rate : opts.rates) {
        if (rate < 0) throw UsageError("tax rates must be non-negative");
        TaxScenario scenario;
        scenario.tax_rate = rate;
        scenario.base = parse_base(base);
        ScenarioTrajectory traj = simulate(models.czl, models.uzl, inputs, scenario);
        write_trajectory(outputs.add("trajectory_tau" + rate_tag(rate) + "." + table_ext(fmt)),
                         traj, fmt);
        for (const auto& warning : traj.warnings)
            std::cerr << "warning: " << warning << "\n";
    }
    outputs.flush(opts.out);
    return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::string& base) {
    const NationalSeries series = load_series(opts);
    const Models models = resolve_models(opts, series);
    const auto inputs = simulation_inputs(series);
    const OutputFormat fmt = parse_format(opts);

    auto points = sweep(models.czl, models.uzl, inputs, opts.rates, parse_base(base));
    OutputSet outputs;
    write_sweep(outputs.add(std::string("sweep.") + table_ext(fmt)), points, fmt);
    outputs.flush(opts.out);
    return 0;
}

int cmd_report(const CommonOpts& opts) {
    auto panels = load_panels(opts);
    auto tables = capacity_series(panels);

    ChartSeries capacity{"capacity output (t)", {}, {}};
    ChartSeries catch_s{"practical catch (t)", {}, {}};
    ChartSeries utilization{"capacity utilization", {}, {}};
    for (const auto& table : tables) {
        capacity.years.push_back(table.year);
        capacity.values.push_back(table.total_capacity_t);
        catch_s.years.push_back(table.year);
        catch_s.values.push_back(table.total_catch_t);
        utilization.years.push_back(table.year);
        utilization.values.push_back(table.national_utilization());
    }

    OutputSet outputs;
    {
        auto& f = outputs.add("fig1_capacity_output.csv");
        f << "year,value\n";
        for (std::size_t i = 0; i < capacity.years.size(); ++i)
            f << capacity.years[i] << ',' << format_tons(capacity.values[i]) << '\n';
    }
    {
        auto& f = outputs.add("fig1_practical_catch.csv");
        f << "year,value\n";
        for (std::size_t i = 0; i < catch_s.years.size(); ++i)
            f << catch_s.years[i] << ',' << format_tons(catch_s.values[i]) << '\n';
    }
    {
        auto& f = outputs.add("fig2_capacity_utilization.csv");
        f << "year,value\n";
        for (std::size_t i = 0; i < utilization.years.size(); ++i)
            f << utilization.years[i] << ',' << format_ratio(utilization.values[i]) << '\n';
    }

    // Figure 3: simulated capacity paths across tax rates. Needs income, so
    // it is emitted only when the national data is available (--seed-data).
    std::vector<ChartSeries> fig3;
    if (opts.seed_data) {
        const NationalSeries series = load_bundled_national();
        const Models models = resolve_models(opts, series);
        const auto inputs = simulation_inputs(series);
        std::vector<double> rates = opts.rates;
        if (rates.empty()) rates = {5, 40, 60, 80};
        auto& f = outputs.add("fig3_simulated_capacity.csv");
        f << "year,value,rate\n";
        for (double rate : rates) {
            TaxScenario scenario;
            scenario.tax_rate = rate;
            ScenarioTrajectory traj = simulate(models.czl, models.uzl, inputs, scenario);
            ChartSeries s{"tax " + format_ratio(rate), {}, {}};
            for (const auto& r : traj.rows) {
                f << r.year << ',' << format_tons(r.capacity_t) << ','
                  << format_ratio(rate) << '\n';
                s.years.push_back(r.year);
                s.values.push_back(r.capacity_t);
            }
            fig3.push_back(std::move(s));
        }
    }

    if (opts.plots) {
        std::vector<ChartSeries> fig1{capacity, catch_s};
        write_svg_chart(outputs.add("fig1.svg"), "Capacity output and practical catch", fig1);
        std::vector<ChartSeries> fig2{utilization};
        write_svg_chart(outputs.add("fig2.svg"), "Capacity utilization", fig2);
        if (!fig3.empty())
            write_svg_chart(outputs.add("fig3.svg"), "Simulated capacity by tax rate", fig3);
    }
    outputs.flush(opts.out);
    return 0;
}

int cmd_validate(const CommonOpts& opts) {
    auto panels = load_panels(opts);
    std::vector<RecordedDea> recorded;
    if (opts.seed_data) recorded = load_bundled_recorded();
    auto findings = validate_panel(panels, recorded, {});
    const OutputFormat fmt = parse_format(opts);

    OutputSet outputs;
    write_findings(outputs.add(std::string("findings.") + table_ext(fmt)), findings, fmt);
    outputs.flush(opts.out);
    std::cout << findings.size() << " finding(s)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fleet capacity analytics: DEA capacity measurement, capacity/"
                 "utilization equations, and per-ton capacity tax simulation"};
    app.require_subcommand(1);

    CommonOpts measure_opts, fit_opts, sim_opts, sweep_opts, report_opts, validate_opts;
    std::string sim_base = "actual", sweep_base = "actual";

    auto* measure = app.add_subcommand("measure", "Per-year DEA capacity tables");
    add_io_flags(measure, measure_opts);

    auto* fit = app.add_subcommand("fit", "Fit the capacity and utilization equations");
    add_io_flags(fit, fit_opts, false);

    auto* simulate = app.add_subcommand("simulate", "Simulate per-ton tax scenarios");
    add_io_flags(simulate, sim_opts, false);
    simulate->add_option("--rates", sim_opts.rates, "Tax rates, yuan per capacity ton")
        ->delimiter(',');
    simulate->add_option("--coeffs", sim_opts.coeffs, "Coefficient source")
        ->check(CLI::IsMember({"refit", "printed"}))
        ->capture_default_str();
    simulate->add_option("--base", sim_base, "Tax base")
        ->check(CLI::IsMember({"actual", "simulated"}))
        ->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "Curtailment summary over a rate grid");
    add_io_flags(sweep_cmd, sweep_opts, false);
    sweep_cmd->add_option("--rates", sweep_opts.rates, "Tax rates, yuan per capacity ton")
        ->delimiter(',');
    sweep_cmd->add_option("--coeffs", sweep_opts.coeffs, "Coefficient source")
        ->check(CLI::IsMember({"refit", "printed"}))
        ->capture_default_str();
    sweep_cmd->add_option("--base", sweep_base, "Tax base")
        ->check(CLI::IsMember({"actual", "simulated"}))
        ->capture_default_str();

    auto* report = app.add_subcommand("report", "Figure data series and optional charts");
    add_io_flags(report, report_opts);
    report->add_option("--rates", report_opts.rates, "Tax rates for the scenario figure")
        ->delimiter(',');
    report->add_option("--coeffs", report_opts.coeffs, "Coefficient source")
        ->check(CLI::IsMember({"refit", "printed"}))
        ->capture_default_str();
    report->add_flag("--plots", report_opts.plots, "Also emit SVG charts");

    auto* validate = app.add_subcommand("validate", "Data-quality report on the panel");
    add_io_flags(validate, validate_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit class 1
    }

    try {
        if (measure->parsed()) return cmd_measure(measure_opts);
        if (fit->parsed()) return cmd_fit(fit_opts);
        if (simulate->parsed()) return cmd_simulate(sim_opts, sim_base);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts, sweep_base);
        if (report->parsed()) return cmd_report(report_opts);
        if (validate->parsed()) return cmd_validate(validate_opts);
    } catch (const Error& e) {
        std::cerr << "fleetcap: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "fleetcap: internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
