// Runs the built totient-lab binary as a child process and checks exit codes
// and stream separation.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct ProcessResult {
    int exit_code = -1;
    std::string out;
};

ProcessResult execute(const std::string& args)
{
    const std::string command = std::string(TOTIENT_LAB_BINARY) + " " + args + " 2>/dev/null";
    ProcessResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buffer{};
    while (const std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
        result.out.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

int exit_code_with_stderr_only(const std::string& args)
{
    const std::string command = std::string(TOTIENT_LAB_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(CliExec, Success)
{
    const auto r = execute("totient 9450 --convention euler");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "2160\n");

    const auto count = execute("count 20 --method all --format csv");
    EXPECT_EQ(count.exit_code, 0);
    EXPECT_EQ(count.out,
              "max_denominator,total_unreduced,excluded,count_by_exclusion,count_by_totient_sum,"
              "count_by_enumeration\n20,190,63,127,127,127\n");
}

TEST(CliExec, DomainErrorsExitTwoWithEmptyStdout)
{
    for (const char* args : {"totient 0", "totient +1", "totient ' 12'", "count 1",
                             "count 20000 --method enumerate", "farey 1", "series 1", "bogus",
                             "table 5 --convention ancient"}) {
        const auto r = execute(args);
        EXPECT_EQ(r.exit_code, 2) << args;
        EXPECT_TRUE(r.out.empty()) << args;
        EXPECT_EQ(exit_code_with_stderr_only(args), 2) << args;
    }
}

TEST(CliExec, BenchExitsZeroWhenChecksumsAgree)
{
    EXPECT_EQ(execute("bench 2000").exit_code, 0);
}
