// Bundled subset of W3C-style N-Triples syntax cases: positives must parse
// cleanly, negatives must be rejected in strict mode and skipped with a
// count otherwise. Case names follow the conformance suite layout.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rdfqa_tests {

struct SyntaxCase {
  std::string name;
  std::string content;
  bool positive = true;
  std::size_t expected_triples = 0;  // positives
  std::size_t expected_bad_lines = 0;  // negatives, in skip-and-count mode
};

inline const std::vector<SyntaxCase>& w3c_cases() {
  static const std::vector<SyntaxCase> cases = [] {
    std::vector<SyntaxCase> v;
    auto pos = [&](std::string name, std::string content, std::size_t triples) {
      v.push_back({std::move(name), std::move(content), true, triples, 0});
    };
    auto neg = [&](std::string name, std::string content,
                   std::size_t bad_lines = 1) {
      v.push_back({std::move(name), std::move(content), false, 0, bad_lines});
    };

    pos("nt-syntax-file-01", "", 0);
    pos("nt-syntax-file-02", "#Empty file.\n", 0);
    pos("nt-syntax-file-03", "#One comment, one empty line.\n\n", 0);
    pos("nt-syntax-uri-01",
        "<http://example/s> <http://example/p> <http://example/o> .\n", 1);
    pos("nt-syntax-uri-02",
        "# x53 is capital S\n"
        R"(<http://example/S> <http://example/p> <http://example/o> .)"
        "\n",
        1);
    pos("nt-syntax-uri-03",
        "# x10000 is outside the BMP\n"
        R"(<http://example/\U00010000> <http://example/p> <http://example/o> .)"
        "\n",
        1);
    pos("nt-syntax-uri-04",
        "<http://example/s> <http://example/p> "
        "<scheme:!$%25&'()*+,-./0123456789:/@ABCDEFGHIJKLMNOPQRSTUVWXYZ_"
        "abcdefghijklmnopqrstuvwxyz~?#> .\n",
        1);
    pos("nt-syntax-string-01",
        "<http://example/s> <http://example/p> \"string\" .\n", 1);
    pos("nt-syntax-string-02",
        "<http://example/s> <http://example/p> \"string\"@en .\n", 1);
    pos("nt-syntax-string-03",
        "<http://example/s> <http://example/p> \"string\"@en-uk .\n", 1);
    pos("nt-syntax-str-esc-01",
        R"(<http://example/s> <http://example/p> "a\n" .)" "\n", 1);
    pos("nt-syntax-str-esc-02",
        R"(<http://example/s> <http://example/p> "a b" .)" "\n", 1);
    pos("nt-syntax-str-esc-03",
        R"(<http://example/s> <http://example/p> "a\U00000020b" .)" "\n", 1);
    pos("nt-syntax-bnode-01", "_:a  <http://example/p> <http://example/o> .\n",
        1);
    pos("nt-syntax-bnode-02",
        "<http://example/s> <http://example/p> _:a .\n"
        "_:a  <http://example/p> <http://example/o> .\n",
        2);
    pos("nt-syntax-bnode-03",
        "<http://example/s> <http://example/p> _:1a .\n"
        "_:1a  <http://example/p> <http://example/o> .\n",
        2);
    pos("nt-syntax-datatypes-01",
        "<http://example/s> <http://example/p> "
        "\"123\"^^<http://www.w3.org/2001/XMLSchema#byte> .\n",
        1);
    pos("nt-syntax-datatypes-02",
        "<http://example/s> <http://example/p> "
        "\"123\"^^<http://www.w3.org/2001/XMLSchema#string> .\n",
        1);
    pos("comment_following_triple",
        "<http://example/s> <http://example/p> <http://example/o> . # comment\n",
        1);
    pos("comment_following_literal",
        "<http://example/s> <http://example/p> \"o\" . # comment\n", 1);
    pos("langtagged_string",
        "<http://example/s> <http://example/p> \"chat\"@en .\n", 1);
    pos("lantag_with_subtag",
        "<http://example/s> <http://example/p> \"chat\"@en-us .\n", 1);
    pos("lantag_with_numeric_subtag",
        "<http://example/s> <http://example/p> \"chat\"@en-us2-x3 .\n", 1);
    pos("minimal_whitespace",
        "<http://example/s><http://example/p><http://example/o>.\n"
        "<http://example/s><http://example/p>\"Alice\".\n"
        "<http://example/s><http://example/p>_:o.\n"
        "_:s<http://example/p><http://example/o>.\n"
        "_:s<http://example/p>\"Alice\"@en.\n"
        "_:s<http://example/p>_:bnode1.\n",
        6);
    pos("literal_true",
        "<http://example/s> <http://example/p> "
        "\"true\"^^<http://www.w3.org/2001/XMLSchema#boolean> .\n",
        1);
    pos("literal_with_squote",
        "<http://example/s> <http://example/p> \"x'y\" .\n", 1);
    pos("literal_with_2_dquotes",
        R"(<http://example/s> <http://example/p> "x\"\"y" .)" "\n", 1);
    pos("literal_all_controls",
        R"(<http://example/s> <http://example/p> "\b\t\r\n\f" .)" "\n", 1);
    {
      // Raw C0 controls other than LF/CR are legal literal characters.
      std::string line = "<http://example/s> <http://example/p> \"a";
      line += static_cast<char>(0x01);
      line += static_cast<char>(0x7F);
      line += "b\" .\n";
      pos("literal_ascii_boundaries", line, 1);
    }
    pos("literal_with_raw_tab",
        "<http://example/s> <http://example/p> \"a\tb\" .\n", 1);
    pos("iri_with_query_and_fragment",
        "<http://example/s> <http://example/p> <http://example/q?a=1&b=[2]#f> .\n",
        1);
    pos("mixed_sample",
        "# a small mixed group\n"
        "<http://example/a> <http://example/p> <http://example/b> .\n"
        "_:x <http://example/p> \"lit\"@de-DE .\n"
        "<http://example/a> <http://example/q> "
        "\"-4.2\"^^<http://www.w3.org/2001/XMLSchema#decimal> .\n"
        "\n"
        "<http://example/b> <http://example/p> _:x . # trailing comment\n",
        4);

    neg("nt-syntax-bad-uri-01",
        "# Bad IRI : space.\n"
        "<http://example/ space> <http://example/p> <http://example/o> .\n");
    neg("nt-syntax-bad-uri-02",
        "# Bad IRI : bad escape.\n"
        R"(<http://example/\u00ZZ11> <http://example/p> <http://example/o> .)"
        "\n");
    neg("nt-syntax-bad-uri-03",
        "# Bad IRI : bad long escape.\n"
        R"(<http://example/\U00ZZ1111> <http://example/p> <http://example/o> .)"
        "\n");
    neg("nt-syntax-bad-uri-04",
        "# Bad IRI : character escapes not allowed.\n"
        R"(<http://example/\n> <http://example/p> <http://example/o> .)" "\n");
    neg("nt-syntax-bad-uri-05",
        "# Bad IRI : character escapes not allowed (2).\n"
        R"(<http://example/\/> <http://example/p> <http://example/o> .)" "\n");
    neg("nt-syntax-bad-uri-06",
        "# No relative IRIs in N-Triples\n"
        "<s> <http://example/p> <http://example/o> .\n");
    neg("nt-syntax-bad-uri-07",
        "# No relative IRIs in N-Triples\n"
        "<http://example/s> <p> <http://example/o> .\n");
    neg("nt-syntax-bad-uri-08",
        "# No relative IRIs in N-Triples\n"
        "<http://example/s> <http://example/p> <o> .\n");
    neg("nt-syntax-bad-uri-09",
        "# No relative IRIs in N-Triples\n"
        "<http://example/s> <http://example/p> \"foo\"^^<dt> .\n");
    neg("nt-syntax-bad-prefix-01", "@prefix : <http://example/> .\n");
    neg("nt-syntax-bad-base-01", "@base <http://example/> .\n");
    neg("nt-syntax-bad-struct-01",
        "<http://example/s> <http://example/p> <http://example/o>, "
        "<http://example/o2> .\n");
    neg("nt-syntax-bad-struct-02",
        "<http://example/s> <http://example/p> <http://example/o>; "
        "<http://example/p2>, <http://example/o2> .\n");
    neg("nt-syntax-bad-lang-01",
        "<http://example/s> <http://example/p> \"string\"@1 .\n");
    neg("nt-syntax-bad-esc-01",
        R"(<http://example/s> <http://example/p> "a\zb" .)" "\n");
    neg("nt-syntax-bad-esc-02",
        R"(<http://example/s> <http://example/p> "a\uWXYZb" .)" "\n");
    neg("nt-syntax-bad-esc-03",
        R"(<http://example/s> <http://example/p> "a\U0000WXYZb" .)" "\n");
    neg("nt-syntax-bad-esc-04",
        R"(<http://example/s> <http://example/p> "a\uD800b" .)" "\n");
    neg("nt-syntax-bad-string-01",
        "<http://example/s> <http://example/p> \"abc' .\n");
    neg("nt-syntax-bad-string-02",
        "<http://example/s> <http://example/p> 1.0 .\n");
    neg("nt-syntax-bad-string-03",
        "<http://example/s> <http://example/p> 1.0e1 .\n");
    neg("nt-syntax-bad-string-04",
        "<http://example/s> <http://example/p> '''abc''' .\n");
    neg("nt-syntax-bad-string-05",
        "<http://example/s> <http://example/p> \"\"\"abc\"\"\" .\n");
    neg("nt-syntax-bad-string-06",
        "<http://example/s> <http://example/p> \"abc\n");
    neg("nt-syntax-bad-string-07",
        "<http://example/s> <http://example/p> abc\" .\n");
    neg("nt-syntax-bad-num-01", "<http://example/s> <http://example/p> 1 .\n");
    neg("nt-syntax-bad-num-02", "<http://example/s> <http://example/p> -1 .\n");
    neg("nt-syntax-bad-num-03",
        "<http://example/s> <http://example/p> 1.0e0 .\n");
    neg("literal_as_subject",
        "\"abc\" <http://example/p> <http://example/o> .\n");
    neg("blank_as_predicate",
        "<http://example/s> _:p <http://example/o> .\n");
    neg("missing_terminal_dot",
        "<http://example/s> <http://example/p> <http://example/o>\n");
    neg("content_after_dot",
        "<http://example/s> <http://example/p> <http://example/o> . <http://example/x>\n");
    neg("lang_without_literal",
        "<http://example/s> <http://example/p> @en .\n");
    neg("bad_blank_label_start",
        "_:-a <http://example/p> <http://example/o> .\n");
    neg("caret_without_datatype",
        "<http://example/s> <http://example/p> \"x\"^^ .\n");
    return v;
  }();
  return cases;
}

}  // namespace rdfqa_tests
