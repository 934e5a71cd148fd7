#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "qwcavity/csv.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QWCAVITY_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("qwcavity_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const std::string params = "--g 0.1 --epsilon 0.2 --kappa 0.0002 --gamma 0 --alpha 1e-8";
const std::string fast = " --t_max 2 --radial_nodes 60 --angular_nodes 32";

} // namespace

TEST(Cli, SimulateWithConfigFile) {
    const auto dir = fresh_dir("sim");
    { std::ofstream(dir / "ref_params.cfg") << "# reference point\ng=0.1\nepsilon=0.2\nkappa=0.0002\ngamma=0\nalpha=1e-8\nt_max=2\n"; }
    EXPECT_EQ(run_cli("simulate --config " + (dir / "ref_params.cfg").string() + " --radial_nodes 60 --out_dir " +
                      (dir / "out").string()),
              0);
    const auto table = qwcavity::read_csv(dir / "out" / "measures.csv");
    EXPECT_EQ(table.rows.size(), 21u);
    EXPECT_TRUE(fs::exists(dir / "out" / "esd.csv"));
}

TEST(Cli, ExitCodes) {
    const auto dir = fresh_dir("codes");
    EXPECT_EQ(run_cli("simulate --g 0.1"), 2);                                   // missing parameters
    EXPECT_EQ(run_cli("simulate " + params + " --dt -1"), 2);                     // invalid value
    EXPECT_EQ(run_cli("simulate " + params + " --config /nonexistent/x.cfg"), 4); // unreadable config
    EXPECT_EQ(run_cli("frobnicate"), 2);
    { std::ofstream(dir / "blocker") << "x"; }
    EXPECT_EQ(run_cli("simulate " + params + fast + " --out_dir " + (dir / "blocker" / "sub").string()), 4);
    EXPECT_EQ(run_cli("simulate " + params + " --radial_nodes 20 --sample_stride 1 --dt 1e80 --t_max 1e80 --out_dir " +
                      (dir / "numeric").string()),
              3);
    EXPECT_EQ(run_cli("wpd " + params + fast + " --times 5 --out_dir " + dir.string()), 5);
    EXPECT_EQ(run_cli("plot --csv " + (dir / "none.csv").string() + " --columns S_W --out x.svg"), 4);
}

TEST(Cli, SweepWpdAndPlot) {
    const auto dir = fresh_dir("sweep");
    EXPECT_EQ(run_cli("sweep --g 0.1 --epsilon 0.2 --kappa 0.0002 --alpha 1e-8 --param gamma --values 0,0.1 --jobs 2" +
                      fast + " --out_dir " + dir.string()),
              0);
    EXPECT_TRUE(fs::exists(dir / "gamma=0" / "measures.csv"));
    EXPECT_TRUE(fs::exists(dir / "gamma=0.1" / "measures.csv"));
    EXPECT_EQ(qwcavity::read_csv(dir / "summary.csv").rows.size(), 2u);

    EXPECT_EQ(run_cli("wpd " + params + fast + " --times 0,1,2 --out_dir " + dir.string()), 0);
    EXPECT_EQ(qwcavity::read_csv(dir / "wpd.csv").rows.size(), 3u * 32u);

    const auto csv = (dir / "gamma=0" / "measures.csv").string();
    EXPECT_EQ(run_cli("plot --csv " + csv + " --columns S_W,C --out " + (dir / "p.svg").string()), 0);
    EXPECT_TRUE(fs::exists(dir / "p.svg"));
    EXPECT_EQ(run_cli("plot --csv " + csv + " --columns nope --out " + (dir / "q.svg").string()), 5);
}
