#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prodex/cli.hpp"

namespace {

struct Result
{
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "prodex");
    std::ostringstream out, err;
    int code = prodex::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST(Cli, Expand)
{
    EXPECT_EQ(run({"expand", "--coeffs", "1,-1", "--order", "4"}).out,
              "{\"exponents\":[\"1\",\"0\",\"0\",\"0\"],\"order\":4}\n");
    EXPECT_EQ(run({"expand", "--coeffs", "1,1,1,1,1,1,1,1,1", "--order", "8"}).out,
              "{\"exponents\":[\"-1\",\"-1\",\"0\",\"-1\",\"0\",\"0\",\"0\",\"-1\"],\"order\":8}\n");
    EXPECT_EQ(run({"--format", "plain", "expand", "--coeffs", "1,-1,-1", "--order", "6"}).out,
              "1 1\n2 1\n3 1\n4 1\n5 2\n6 2\n");
}

TEST(Cli, ExpandErrors)
{
    auto r = run({"expand", "--coeffs", "2,1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("constant term"), std::string::npos);

    EXPECT_EQ(run({"expand", "--coeffs", "1,a"}).code, 1);
    EXPECT_EQ(run({"expand"}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"expand", "--coeffs", "1", "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"expand", "--coeffs", "1", "--order", "0"}).code, 1);
}

TEST(Cli, Invert)
{
    auto r = run({"invert", "--ones", "--order", "8", "--tilde", "--format", "plain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 1\n2 2\n3 1\n4 4\n5 1\n6 0\n7 1\n8 14\n");
    EXPECT_EQ(run({"invert", "--exponents", "0,0,0"}).out, "{\"exponents\":[\"0\",\"0\",\"0\"],\"order\":3}\n");
}

TEST(Cli, InvertTwiceIsIdentity)
{
    auto once = run({"invert", "--exponents", "3,-1,4,1,-5,9"});
    auto twice = run({"invert", "--input", temp_file("prodex_inv.json", once.out)});
    EXPECT_EQ(twice.out, "{\"exponents\":[\"3\",\"-1\",\"4\",\"1\",\"-5\",\"9\"],\"order\":6}\n");
}

TEST(Cli, GhostAndUnghost)
{
    EXPECT_EQ(run({"ghost", "--ones", "--order", "6", "--format", "plain"}).out, "1 1\n2 3\n3 4\n4 7\n5 6\n6 12\n");
    EXPECT_EQ(run({"unghost", "--values", "1,3,4,7,6,12"}).out,
              "{\"exponents\":[\"1\",\"1\",\"1\",\"1\",\"1\",\"1\"],\"order\":6}\n");
    auto bad = run({"unghost", "--values", "1,2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("not realizable at N=2, remainder 1"), std::string::npos);
}

TEST(Cli, JsonRoundTrips)
{
    const std::string coeffs = "{\"coeffs\":[\"1\",\"-3\",\"0\",\"7\",\"-2\",\"5\"],\"order\":5}\n";
    auto expanded = run({"expand", "--input", temp_file("prodex_s.json", coeffs)});
    EXPECT_EQ(run({"series", "--input", temp_file("prodex_e.json", expanded.out)}).out, coeffs);

    auto ghost = run({"ghost", "--exponents", "2,-7,0,1,1,3,-4"});
    auto back = run({"unghost", "--input", temp_file("prodex_g.json", ghost.out)});
    EXPECT_EQ(back.out, "{\"exponents\":[\"2\",\"-7\",\"0\",\"1\",\"1\",\"3\",\"-4\"],\"order\":7}\n");
}

TEST(Cli, DefaultOrderAndEnvironment)
{
    auto r = run({"ghost", "--ones"});
    EXPECT_NE(r.out.find("\"order\":64"), std::string::npos);
    ::setenv("PRODEX_DEFAULT_ORDER", "5", 1);
    EXPECT_EQ(run({"ghost", "--ones", "--format", "plain"}).out, "1 1\n2 3\n3 4\n4 7\n5 6\n");
    ::setenv("PRODEX_DEFAULT_ORDER", "zero", 1);
    EXPECT_EQ(run({"ghost", "--ones"}).code, 1);
    ::unsetenv("PRODEX_DEFAULT_ORDER");
}

TEST(Cli, Family)
{
    EXPECT_EQ(run({"family", "--d", "2", "--order", "4"}).out,
              "{\"coeffs\":[\"1\",\"-1\",\"-2\",\"-4\",\"-8\"],\"order\":4}\n");
    EXPECT_EQ(run({"family", "--d", "1", "--order", "8", "--expand", "--format", "plain"}).out,
              "1 1\n2 1\n3 2\n4 3\n5 6\n6 8\n7 18\n8 27\n");
}

TEST(Cli, Fermat)
{
    auto r = run({"fermat", "--d", "1", "--p", "3", "--format", "plain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d 1\np 3\nm_p 1\nm_2p 2\nn_p -1\nn_2p -1\nquotient 2\nidentity OK\n");
    auto j = run({"fermat", "--d", "3", "--p", "3"});
    EXPECT_NE(j.out.find("\"quotient\":\"12\""), std::string::npos);
    EXPECT_EQ(run({"fermat", "--d", "1", "--p", "4"}).code, 1);
    EXPECT_EQ(run({"fermat", "--d", "1", "--p", "5", "--tail", "3,-2,8"}).code, 0);
}

TEST(Cli, Check)
{
    EXPECT_EQ(run({"check", "--a", "10", "--p", "7"}).out, "{\"a\":10,\"holds\":true,\"p\":7}\n");
    EXPECT_EQ(run({"check", "--a", "10", "--p", "8"}).code, 1);
}

TEST(Cli, Wieferich)
{
    auto r = run({"wieferich", "--from", "2", "--to", "10000", "--format", "plain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "lo 2\nhi 10000\nprimes_tested 1229\nhit 1093\nhit 3511\n");
    auto a = run({"wieferich", "--from", "2", "--to", "3000000", "--threads", "1"});
    auto b = run({"--threads", "4", "wieferich", "--from", "2", "--to", "3000000"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"wieferich", "--from", "0", "--to", "10"}).code, 1);
    EXPECT_EQ(run({"wieferich", "--from", "2", "--to", "10", "--threads", "0"}).code, 1);
}

TEST(Cli, Partitions)
{
    auto r = run({"partitions", "--order", "10", "--via-product", "--format", "plain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("10 42 42\n"), std::string::npos);
    auto j = run({"partitions", "--order", "10", "--via-product"});
    EXPECT_NE(j.out.find("\"match\":true"), std::string::npos);
    EXPECT_EQ(run({"partitions", "--order", "5"}).out, "{\"order\":5,\"values\":[\"1\",\"1\",\"2\",\"3\",\"5\",\"7\"]}\n");
}

TEST(Cli, Help)
{
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("wieferich"), std::string::npos);
}

TEST(Cli, BinaryExitCodes)
{
    const std::string exe = PRODEX_CLI_PATH;
    EXPECT_EQ(std::system((exe + " expand --coeffs 1,-1 --order 4 > /dev/null").c_str()), 0);
    int status = std::system((exe + " unghost --values 1,2 > /dev/null 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
    status = std::system((exe + " expand --coeffs 3 > /dev/null 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
}
