#include <sstream>

#include "doctest.h"
#include "lk/cli.hpp"
#include "lk/corpus.hpp"

using namespace lk;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

}  // namespace

TEST_CASE("document round trips are bit-exact on the corpus") {
    for (auto& name : corpus_names()) {
        json doc = corpus_document(name);
        std::string type = doc.value("type", "");
        json again;
        if (type == "linf") {
            auto [L, field] = linf_from_json(doc);
            again = linf_to_json(L, field);
        } else if (type == "mc") {
            auto d = mc_from_json(doc);
            again = mc_to_json(d.element, d.field);
        } else if (type == "horn") {
            auto d = horn_from_json(doc);
            again = horn_to_json(d.horn, d.field);
        } else if (type == "simpset") {
            again = simpset_to_json(simpset_from_json(doc));
        } else if (type == "two_group") {
            again = two_group_to_json(two_group_from_json(doc));
        } else if (type == "boundary") {
            ScalarField f = ScalarField::parse(doc.value("scalars", "Q"));
            again = boundary_to_json(boundary_from_json(doc), f);
        } else if (type == "subcomplex") {
            again = subcomplex_to_json(subcomplex_from_json(doc));
        } else {
            again = doc;  // passthrough data (cocycle datum)
        }
        CHECK_MESSAGE(doc.dump() == again.dump(), ("round trip failed for " + name));
    }
}

TEST_CASE("exit codes: 0 true, 1 false, 2 malformed") {
    CHECK(cli({"linf", "check", "corpus:su2"}) == 0);
    CHECK(cli({"linf", "check", "corpus:jacobiator-counterexample"}) == 1);
    CHECK(cli({"linf", "check"}) == 2);
    CHECK(cli({"linf", "check", "/no/such/file.json"}) == 2);
    CHECK(cli({"simpset", "kan", "corpus:delta1"}) == 1);
    CHECK(cli({"simpset", "kan", "corpus:kz2"}) == 0);
    CHECK(cli({"simpset", "collapse", "corpus:horn-2-1"}) == 0);
    CHECK(cli({"simpset", "collapse", "corpus:boundary-2"}) == 1);
    CHECK(cli({"nonsense"}) == 2);
}

TEST_CASE("reports carry provenance tags") {
    std::string text;
    cli({"linf", "check", "corpus:str-su2"}, &text);
    CHECK(text.find("[exact]") != std::string::npos);
    CHECK(cli({"string", "calibrate", "--order", "8"}, &text) == 0);
    CHECK(text.find("[quadrature(order=8)]") != std::string::npos);

    // json format
    cli({"--format", "json", "linf", "check", "corpus:su2"}, &text);
    json parsed = json::parse(text);
    CHECK(parsed.is_array());
    CHECK(parsed[0]["provenance"] == "exact");
}

TEST_CASE("fill-horn through the CLI round trip") {
    std::string text;
    int rc = cli({"intl", "fill-horn", "corpus:horn-heisenberg"}, &text);
    CHECK(rc == 0);
    // the output document (after the report line) parses as an mc element
    auto pos = text.find('{');
    REQUIRE(pos != std::string::npos);
    json j = json::parse(text.substr(pos));
    auto doc = mc_from_json(j);
    auto ce = ce_differential(*doc.algebra);
    CHECK(validate_mc(ce, doc.element).ok);
}

TEST_CASE("corpus write and env override") {
    std::string dir = "/tmp/lk_corpus_test";
    CHECK(cli({"corpus", "write", dir}) == 0);
    setenv("LINFTYKAN_CORPUS_DIR", dir.c_str(), 1);
    CHECK(cli({"linf", "check", "corpus:su2"}) == 0);
    unsetenv("LINFTYKAN_CORPUS_DIR");
}
