#include "kicktops/config.hpp"
#include "kicktops/csv.hpp"
#include "kicktops/experiments.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kicktops;

namespace {

ExperimentConfig small_config()
{
    ExperimentConfig c;
    c.s = SpinMagnitude(8);
    c.l = SpinMagnitude(10);
    c.steps = 6;
    c.ensemble = 2000;
    c.lyapunov_steps = 2000;
    return c;
}

std::string render(const RunOutput& out, const ExperimentConfig& config)
{
    std::ostringstream text;
    write_tables(text, out.header(config), out.tables);
    return text.str();
}

const Table& table(const RunOutput& out, const std::string& name)
{
    for (const auto& t : out.tables) {
        if (t.name == name) {
            return t;
        }
    }
    FAIL("missing table " << name);
    return out.tables.front();
}

}  // namespace

TEST_CASE("numbers are written with 17 significant digits")
{
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0) == "2");
    for (double x : {M_PI, 1.0 / 3.0, -6.02e23, 5e-324}) {
        CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("config text parsing")
{
    ExperimentConfig c;
    apply_config_text(c, "# canonical run\n"
                         "preset = paper\n"
                         "gamma=1.215   # mixed regime\n"
                         "theta-s = 20\n"
                         "observable = jz,lz\n"
                         "window = 100:200\n"
                         "snapshots = 0, 50,100\n");
    CHECK(c.s.two_j() == 280);
    CHECK(c.l.two_j() == 308);
    CHECK(c.params.gamma == 1.215);
    CHECK(c.angles_deg[0] == 20.0);
    CHECK(c.observables == std::vector<Observable>{Observable::Jz, Observable::Lz});
    REQUIRE(c.window.has_value());
    CHECK(c.window->first == 100);
    CHECK(c.window->second == 200);
    CHECK(c.snapshots == std::vector<int>{0, 50, 100});

    apply_setting(c, "preset", "ci");
    CHECK(c.s.two_j() == 40);
    CHECK(c.l.two_j() == 44);
    apply_setting(c, "observable", "all");
    CHECK(c.observables.size() == 3);
}

TEST_CASE("config errors are reported")
{
    ExperimentConfig c;
    CHECK_THROWS_AS(apply_setting(c, "colour", "red"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "steps", "ten"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "s", "2.3"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "ensemble", "0"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "window", "12"), std::invalid_argument);
    CHECK_THROWS_AS(apply_setting(c, "preset", "huge"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_text(c, "just words\n"), std::invalid_argument);

    ExperimentConfig bad;
    bad.angles_deg[1] = 360.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ExperimentConfig{};
    bad.angles_deg[0] = 190.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = ExperimentConfig{};
    bad.steps = -1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("describe round-trips through apply_setting")
{
    ExperimentConfig c = small_config();
    c.params.gamma = 0.1 + 0.2;
    c.window = std::pair{3, 6};
    c.snapshots = {1, 4};
    c.synthetic = 0.7;
    ExperimentConfig back;
    for (const auto& [key, value] : c.describe()) {
        apply_setting(back, key, value);
    }
    CHECK(back.describe() == c.describe());
    CHECK(back.params.gamma == c.params.gamma);
}

TEST_CASE("sibling tables are written beside the main file")
{
    const auto dir = std::filesystem::temp_directory_path() / "kicktops_csv_test";
    std::filesystem::create_directories(dir);
    Table a{"main", {"x"}, {}};
    a.add_row({"1"});
    Table b{"extra", {"y", "z"}, {}};
    b.add_row({"2", "3"});
    CHECK_THROWS_AS(b.add_row({"4"}), std::logic_error);
    const auto written = write_tables(dir / "run.csv", {{"seed", "1"}}, {a, b});
    REQUIRE(written.size() == 2);
    CHECK(written[1] == dir / "run_extra.csv");
    std::ifstream in(written[1]);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "# seed=1\n# table: extra\ny,z\n2,3\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("quantum command with zero steps writes the initial marginal only")
{
    ExperimentConfig c = small_config();
    c.steps = 0;
    const RunOutput out = run_quantum(c);
    CHECK(out.ok());
    const Table& d = table(out, "distributions");
    CHECK(d.rows.size() == static_cast<std::size_t>(c.s.dim() + c.l.dim() - 1));
    for (const auto& row : d.rows) {
        CHECK(row[0] == "0");
    }
}

TEST_CASE("header echoes the configuration, version and checks")
{
    const ExperimentConfig c = small_config();
    const std::string text = render(run_quantum(c), c);
    CHECK(text.rfind("# kicktops=", 0) == 0);
    CHECK(text.find("# seed=1\n") != std::string::npos);
    CHECK(text.find("# gamma=2.835") != std::string::npos);
    CHECK(text.find("# check quantum norm drift=pass") != std::string::npos);
}

TEST_CASE("classical command with one member gives a delta histogram")
{
    ExperimentConfig c = small_config();
    c.ensemble = 1;
    c.steps = 2;
    const RunOutput out = run_classical(c);
    CHECK(out.ok());
    for (const auto& row : table(out, "distributions").rows) {
        const double p = std::stod(row[3]) + std::stod(row[4]);
        CHECK((p == 0.0 || p == 1.0));
    }
}

TEST_CASE("compare command is deterministic and reports equilibrium windows")
{
    ExperimentConfig c = small_config();
    c.observables = {Observable::Jz, Observable::Lz};
    c.snapshots = {6};
    const RunOutput a = run_compare(c);
    const RunOutput b = run_compare(c);
    CHECK(a.ok());
    CHECK(render(a, c) == render(b, c));
    const Table& eq = table(a, "equilibrium");
    CHECK(eq.rows.size() == 2);
}

TEST_CASE("uncoupled compare keeps the quantum L_z entropy constant")
{
    ExperimentConfig c = small_config();
    c.params.gamma = 0.0;
    c.observables = {Observable::Lz};
    c.window = std::pair{3, 6};
    const RunOutput out = run_compare(c);
    const Table& series = table(out, "series");
    const double h0 = std::stod(series.rows.front()[2]);
    for (const auto& row : series.rows) {
        CHECK(std::stod(row[2]) == doctest::Approx(h0).epsilon(1e-13));
    }
}

TEST_CASE("lyapunov command on the uncoupled map")
{
    ExperimentConfig c = small_config();
    c.params.gamma = 0.0;
    c.grid = 8;
    const RunOutput out = run_lyapunov(c);
    const Table& t = table(out, "lyapunov");
    CHECK(t.rows.size() == 9);
    for (const auto& row : t.rows) {
        CHECK(std::abs(std::stod(row[4])) < 2e-3);
    }
}

TEST_CASE("scaling command in synthetic mode recovers the -1/2 slope")
{
    ExperimentConfig c;
    c.synthetic = 0.9;
    c.sizes = {11, 22, 44, 88};
    const RunOutput out = run_scaling(c);
    const Table& fit = table(out, "fit");
    CHECK(std::stod(fit.rows[0][1]) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::stod(fit.rows[1][1]) == doctest::Approx(-0.5).epsilon(1e-12));
    c.sizes = {11, 22};
    CHECK_THROWS_AS(run_scaling(c), std::invalid_argument);
}

TEST_CASE("microcanonical command")
{
    ExperimentConfig c;
    c.s = SpinMagnitude(2);
    c.l = SpinMagnitude(4);
    const RunOutput out = run_microcanonical(c);
    CHECK(out.ok());
    const Table& e = table(out, "entropies");
    CHECK(std::stod(e.rows[0][1]) == doctest::Approx(std::log(5.0)).epsilon(1e-14));
    CHECK(table(out, "distributions").rows.size() == 5 + 7);
    CHECK_THROWS_AS(run_command("plot", c), std::invalid_argument);
}
