#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using proxima::cli::CommandResult;
using proxima::cli::run_command;

namespace {

std::string data(const std::string& file) { return (std::filesystem::path(PROXIMA_TEST_DATA_DIR) / file).string(); }

CommandResult run(std::vector<std::string> args) { return run_command(args); }

} // namespace

TEST(Cli, BettiOnShippedFile) {
    CommandResult r = run({"betti", "--probe", "beta0", data("fig1a.space"), "shE"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(r.out, "beta0=3 beta_alpha=1\n");
    EXPECT_EQ(run({"betti", data("fig1b.space") + ":shE_prime"}).out, "beta0=3 beta_alpha=1\n");
    EXPECT_EQ(run({"betti", "fig3b"}).out.substr(0, 6), "beta0=");
}

TEST(Cli, BettiStrictUncovered) {
    CommandResult r = run({"betti", "--strict", "fig2"});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("UncoveredCycle"), std::string::npos);
}

TEST(Cli, AlmostAmiable) {
    CommandResult r = run({"almost-amiable", "--probe", "beta_alpha", "--th", "1", "earrings", "necklace"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "true (|2-3|=1)\n");
    CommandResult tight = run({"almost-amiable", "--probe", "beta_alpha", "--th", "0.5", "earrings", "necklace"});
    EXPECT_EQ(tight.exit_code, 1);
    EXPECT_EQ(tight.out, "false (|2-3|=1)\n");
    EXPECT_EQ(run({"almost-amiable", "--probe", "beta0,beta_alpha", "--th", "1", "earrings", "necklace"}).exit_code, 2);
}

TEST(Cli, Amiable) {
    CommandResult r = run({"amiable", "--probe", "beta_alpha", "earrings", "necklace"});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.out, "false (overlap=0)\n");
    EXPECT_EQ(run({"amiable", "fig1a"}).exit_code, 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"axioms", "--trials", "0"}).exit_code, 2);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
    EXPECT_EQ(run({}).exit_code, 2);
    EXPECT_EQ(run({"betti", "no_such_space"}).exit_code, 2);
    EXPECT_EQ(run({"betti", "fig1a", "missing"}).exit_code, 2);
    EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, Axioms) {
    CommandResult r = run({"axioms", "--trials", "100", "--seed", "7", "fig1a"});
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("P.2 pass (100 trials)"), std::string::npos);
    EXPECT_NE(r.out.find("dP.converse pass"), std::string::npos);
    CommandResult bad = run({"axioms", "--trials", "200", "--inject", "asymmetric", "fig1a"});
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_NE(bad.out.find("P.1 FAIL witness=<"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
    for (std::vector<std::string> args : {std::vector<std::string>{"axioms", "--trials", "50", "fig4b"},
                                          std::vector<std::string>{"boundary", "fig2"},
                                          std::vector<std::string>{"cycles", "butterfly"},
                                          std::vector<std::string>{"fixed", "fig1a"},
                                          std::vector<std::string>{"render", "fig4b"},
                                          std::vector<std::string>{"validate", "necklace"}}) {
        CommandResult a = run(args);
        CommandResult b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.exit_code, b.exit_code);
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, FixedReport) {
    CommandResult r = run({"fixed", "--map", "boundary_complement", "--probe", "beta0", "fig1a", "shE"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    for (const char* key : {"subject=shE\n", "dpc_existential=true\n", "dpc_universal=true\n",
                            "descriptive_fixed=true\n", "amiable=true\n", "image_equals_closure=true\n",
                            "fixed_cell_complex=true\n", "shape_boundary_fixed=true\n"}) {
        EXPECT_NE(r.out.find(key), std::string::npos) << key;
    }
}

TEST(Cli, OtherCommands) {
    CommandResult v = run({"validate", data("fig3b.space")});
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_NE(v.out.find("containment=true"), std::string::npos);
    CommandResult c = run({"cycles", "fig2"});
    EXPECT_NE(c.out.find("cycles=3\n"), std::string::npos);
    CommandResult b = run({"boundary", "fig4b"});
    EXPECT_NE(b.out.find("boundary_components=2\n"), std::string::npos);
    CommandResult d = run({"dnear", "--probe", "beta0", data("fig1a.space") + ":shE", data("fig1b.space") + ":shE_prime"});
    EXPECT_EQ(d.exit_code, 0);
    EXPECT_EQ(d.out.substr(0, 4), "true");
    CommandResult f = run({"fixture", "fig1a"});
    EXPECT_EQ(f.out.rfind("proxima-space 1\n", 0), 0u);
}
