#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <homvec/homvec.hpp>

using namespace homvec;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string command = env + std::string(HOMVEC_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string q(const Graph& g) { return "'" + write_graph6(g) + "'"; }

}  // namespace

TEST(Cli, Count) {
    EXPECT_EQ(run("count --mode hom --left " + q(clique(2)) + " --right " + q(clique(3))).out, "6\n");
    EXPECT_EQ(run("count --mode aut --left " + q(cycle(4))).out, "8\n");
    EXPECT_EQ(run("count --mode hom --left " + q(cycle(3)) + " --right " + q(cycle(6))).out, "0\n");
    EXPECT_EQ(run("count --mode exists --left " + q(cycle(5)) + " --right " + q(gen_kneser(5, 2))).out, "true\n");
    EXPECT_EQ(run("count --mode sur --left " + q(path(3)) + " --right " + q(clique(2))).out, "2\n");
}

TEST(Cli, GraphFromFileAndWeightedTarget) {
    std::string dir = ::testing::TempDir();
    {
        std::ofstream(dir + "k3.g6") << write_graph6(clique(3)) << "\n";
        std::ofstream(dir + "lollipop.json") << write_weighted_json(gen_lollipop(make_rational(1, 2), 3));
    }
    EXPECT_EQ(run("count --mode hom --left " + q(clique(2)) + " --right @" + dir + "k3.g6").out, "6\n");
    EXPECT_EQ(run("count --left " + q(clique(2)) + " --weighted " + dir + "lollipop.json --semiring rationals").out, "12\n");
    EXPECT_EQ(run("count --left " + q(clique(2)) + " --weighted " + dir + "lollipop.json --semiring naturals").code, 2);
}

TEST(Cli, Test) {
    auto [x1, x2] = gen_chrom_pair();
    auto r = run("test --relation chromeq " + q(x1) + " " + q(x2));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "equivalent\n");
    auto [g3, h3] = gen_frac_pair(3);
    EXPECT_EQ(run("test --relation wl:1 " + q(g3) + " " + q(h3)).code, 0);
    EXPECT_EQ(run("test --relation fraciso " + q(g3) + " " + q(h3)).code, 0);
    auto d = run("test --relation wl:2 " + q(g3) + " " + q(h3));
    EXPECT_EQ(d.code, 1);
    EXPECT_EQ(d.out, "distinguished\n" + write_graph6(clique(3)) + ",12,0\n");
    EXPECT_EQ(run("test --relation cospectral " + q(disjoint_union(cycle(4), independent(1))) + " " + q(star(4))).code, 0);
    EXPECT_EQ(run("test --relation homeq " + q(cycle(6)) + " " + q(clique(2))).code, 0);
    EXPECT_EQ(run("test --relation iso " + q(x1) + " " + q(x2)).code, 1);
}

TEST(Cli, TestReport) {
    std::string path = ::testing::TempDir() + "report.csv";
    auto [x1, x2] = gen_chrom_pair();
    run("test --relation chromeq --report " + path + " " + q(x1) + " " + q(x2));
    std::ifstream in(path);
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    EXPECT_EQ(header, "g6_left,g6_right,relation,verdict");
    EXPECT_EQ(line, write_graph6(x1) + "," + write_graph6(x2) + ",chromeq,equivalent");
}

TEST(Cli, PolyParamVector) {
    EXPECT_EQ(run("poly --which chromatic " + q(cycle(8))).out,
              "-7*x + 28*x^2 - 56*x^3 + 70*x^4 - 56*x^5 + 28*x^6 - 8*x^7 + x^8\n");
    EXPECT_EQ(run("poly --which characteristic " + q(star(4))).out, "-4*x^3 + x^5\n");
    EXPECT_EQ(run("poly --which cep " + q(clique(2))).out, "x^2 + x*y\n");
    EXPECT_EQ(run("poly --which independence " + q(clique(2))).out, "2*x*y + y^2\n");
    EXPECT_EQ(run("param --which chif " + q(cycle(5))).out, "5/2\n");
    EXPECT_EQ(run("param --which omegaf " + q(cycle(5))).out, "5/2\n");
    EXPECT_EQ(run("param --which chi " + q(cycle(5))).out, "3\n");
    EXPECT_EQ(run("param --which omega " + q(cycle(5))).out, "2\n");
    EXPECT_EQ(run("vector --side right --class cliques --bound 3 " + q(cycle(5))).out, "member_graph6,count\n@,0\nA_,0\nBw,30\n");
    std::string expected = "member_graph6,count\n";
    const std::vector<int> counts{3, 9, 6, 27, 18, 12};
    auto forests = enumerate_treewidth_le(1, 3);
    ASSERT_EQ(forests.size(), counts.size());
    for (std::size_t i = 0; i < forests.size(); ++i) expected += write_graph6(forests[i]) + "," + std::to_string(counts[i]) + "\n";
    EXPECT_EQ(run("vector --side left --class 'tw<=1' --bound 3 " + q(clique(3))).out, expected);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("count --mode hom --left '!!' --right A_").code, 2);
    EXPECT_EQ(run("count --bogus").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("poly --which chromatic " + q(cycle(20))).code, 3);
    EXPECT_EQ(run("test --relation wl:0 A_ A_").code, 2);
}

TEST(Cli, GuardScaleAndGuardName) {
    std::string c20 = q(cycle(20));
    EXPECT_EQ(run("poly --which chromatic " + c20).code, 3);
    auto scaled = run("poly --which chromatic " + c20, "HOMVEC_GUARD_SCALE=2 ");
    EXPECT_EQ(scaled.code, 0);
    EXPECT_EQ(scaled.out.substr(0, 8), "-19*x + ");
    EXPECT_EQ(run("poly --which chromatic " + c20, "HOMVEC_GUARD_SCALE=3/2 ").code, 3);
    std::string command = std::string(HOMVEC_CLI) + " poly --which chromatic " + c20 + " 2>&1 >/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::array<char, 512> buf{};
    std::string err(buf.data(), fread(buf.data(), 1, buf.size(), pipe));
    pclose(pipe);
    EXPECT_NE(err.find("chromatic-vertices"), std::string::npos);
}

TEST(Cli, Deterministic) {
    std::string args = "vector --side left --class all --bound 4 " + q(gen_kneser(5, 2));
    auto first = run(args), second = run(args);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
}

TEST(Cli, Suite) {
    auto r = run("suite --name boolean");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "PASS [10] boolean\n");
    EXPECT_EQ(run("suite --name nonexistent").code, 2);
}
