#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "symspec/io.hpp"

using namespace symspec;
namespace fs = std::filesystem;

namespace {

ClassSpec n_cycles(int n) {
    return ClassSpec(n, {Partition({n})});
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("symspec-test-" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("rational strings: reduced p/q with q omitted when 1") {
    CHECK(rat_to_string(Rat(6)) == "6");
    CHECK(rat_to_string(Rat(-6)) == "-6");
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(4, 2)) == "2");
    CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");

    CHECK(parse_rat("3/2") == Rat(3, 2));
    CHECK(parse_rat("-6") == Rat(-6));
    CHECK(parse_rat("4/2") == Rat(2));
    CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rat("x"), parse_error);
}

TEST_CASE("character table JSON: schema and round trip") {
    CharacterTable t = character_table(4);
    json j = table_to_json(t);
    CHECK(j.at("n") == 4);
    CHECK(j.at("rows").size() == 5);
    CHECK(j.at("cols").at(0) == "4");
    CHECK(j.at("values").at(0).at(0).get<std::string>() == "1");
    CHECK(j.at("class_sizes").at(0).get<std::string>() == "6");

    CharacterTable back = table_from_json(j);
    CHECK(back.n == t.n);
    CHECK(back.rows == t.rows);
    CHECK(back.cols == t.cols);
    CHECK(back.values == t.values);
    CHECK(back.class_sizes == t.class_sizes);
    CHECK(back.degrees == t.degrees);
}

TEST_CASE("character table CSV: Sym(2) golden output") {
    std::ostringstream os;
    write_table_csv(character_table(2), os);
    CHECK(os.str() == "chi,\"2\",\"1,1\"\n"
                      "class_size,1,1\n"
                      "\"2\",1,1\n"
                      "\"1,1\",-1,1\n");
}

TEST_CASE("spectrum report JSON: field values for Sym(4) 4-cycles") {
    json j = report_to_json(spectrum(n_cycles(4)));
    CHECK(j.at("n") == 4);
    CHECK(j.at("classes") == json::array({"4"}));
    CHECK(j.at("vertices") == "24");
    CHECK(j.at("degree") == "6");
    CHECK(j.at("lines").size() == 5);
    CHECK(j.at("lines").at(0).at("eigenvalue") == "6");
    CHECK(j.at("lines").at(0).at("multiplicity") == "1");
    CHECK(j.at("lines").at(4).at("eigenvalue") == "-6");
    CHECK(j.at("lines").at(2).at("contributors") == json::array({"2,2"}));
    CHECK(j.at("energy") == "48");
    CHECK(j.at("nullity") == "4");
    CHECK(j.at("integral") == true);
    CHECK(j.at("hyperenergetic") == true);
}

TEST_CASE("spectrum report JSON: parse(emit(report)) == report") {
    std::vector<ClassSpec> specs{
        n_cycles(4),
        n_cycles(5),
        ClassSpec(5, {Partition({3, 2}), Partition({2, 2, 1})}),
    };
    for (const ClassSpec& spec : specs) {
        SpectrumReport rep = spectrum(spec);
        REQUIRE(report_from_json(report_to_json(rep)) == rep);
    }
}

TEST_CASE("spectrum report CSV: Sym(4) golden output") {
    std::ostringstream os;
    write_report_csv(spectrum(n_cycles(4)), os);
    // eigenvalue (-1)^(n-m-1) (n-1)!/C(n-1,m) puts the hook (2,1,1) at +2
    // and (3,1) at -2
    CHECK(os.str() == "eigenvalue,multiplicity,contributors\n"
                      "6,1,\"4\"\n"
                      "2,9,\"2,1,1\"\n"
                      "0,4,\"2,2\"\n"
                      "-2,9,\"3,1\"\n"
                      "-6,1,\"1,1,1,1\"\n");
}

TEST_CASE("verdict JSON: parameter key tracks the method, detail only on mismatch") {
    ClassSpec spec = n_cycles(4);
    json je = verdict_to_json(verify_exact(spec), spec);
    CHECK(je.at("method") == "exact-moments");
    CHECK(je.at("match") == true);
    CHECK(je.contains("K"));
    CHECK_FALSE(je.contains("tol"));
    CHECK_FALSE(je.contains("detail"));

    json jf = verdict_to_json(verify_float(spec), spec);
    CHECK(jf.at("method") == "float-eigensolve");
    CHECK(jf.contains("tol"));
    CHECK_FALSE(jf.contains("K"));
    CHECK(jf.at("spec").at("classes") == json::array({"4"}));
}

TEST_CASE("fnv1a: known vectors") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("table cache: store, load, revalidate") {
    TempDir dir;
    CharacterTable t = character_table(5);
    store_cached_table(dir.path, t);
    REQUIRE(fs::exists(table_cache_path(dir.path, 5)));

    auto loaded = load_cached_table(dir.path, 5);
    REQUIRE(loaded.has_value());
    CHECK(loaded->values == t.values);
    CHECK(loaded->degrees == t.degrees);

    CHECK_FALSE(load_cached_table(dir.path, 4).has_value()); // not stored
}

TEST_CASE("table cache: checksum catches byte corruption") {
    TempDir dir;
    store_cached_table(dir.path, character_table(4));
    fs::path path = table_cache_path(dir.path, 4);

    std::ifstream is(path);
    std::stringstream buf;
    buf << is.rdbuf();
    std::string text = buf.str();
    auto pos = text.find("\"6\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"7\"");
    std::ofstream(path, std::ios::trunc) << text;

    CHECK_FALSE(load_cached_table(dir.path, 4).has_value());
}

TEST_CASE("table cache: degree-mass revalidation catches consistent tampering") {
    TempDir dir;
    CharacterTable t = character_table(4);
    store_cached_table(dir.path, t);
    fs::path path = table_cache_path(dir.path, 4);

    std::ifstream is(path);
    json file = json::parse(is);
    file["table"]["values"][0][4] = "5"; // degree column of the trivial character
    file["checksum"] = checksum_hex(file["table"].dump());
    std::ofstream(path, std::ios::trunc) << file.dump(2);

    CHECK_FALSE(load_cached_table(dir.path, 4).has_value());
}

TEST_CASE("table cache: clear removes only cache files") {
    TempDir dir;
    store_cached_table(dir.path, character_table(3));
    store_cached_table(dir.path, character_table(4));
    std::ofstream(dir.path / "unrelated.txt") << "keep me\n";

    CHECK(clear_cache(dir.path) == 2);
    CHECK_FALSE(fs::exists(table_cache_path(dir.path, 3)));
    CHECK(fs::exists(dir.path / "unrelated.txt"));
    CHECK(clear_cache(dir.path) == 0);
}

TEST_CASE("cache dir: environment override") {
    ::setenv("SYMSPEC_CACHE_DIR", "/tmp/symspec-env-cache", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/symspec-env-cache"));
    ::unsetenv("SYMSPEC_CACHE_DIR");
    CHECK(default_cache_dir() != fs::path("/tmp/symspec-env-cache"));
}

TEST_CASE("render: text formats stay stable for the headline example") {
    std::ostringstream rep;
    render_report_text(spectrum(n_cycles(4)), rep);
    std::string text = rep.str();
    CHECK(text.find("vertices 24, degree 6") != std::string::npos);
    CHECK(text.find("energy 48 (integer)") != std::string::npos);
    CHECK(text.find("nullity 4") != std::string::npos);
    CHECK(text.find("hyperenergetic yes (threshold 46)") != std::string::npos);

    std::ostringstream tab;
    render_table_text(character_table(2), tab);
    CHECK(tab.str().find("character table of Sym(2)") != std::string::npos);
}
