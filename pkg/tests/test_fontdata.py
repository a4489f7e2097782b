import random

import pytest

from puzzlefonts import fontdata
from puzzlefonts.conveyer import CCW, CW

LINKAGE_FUN = """\
font linkage 1
glyph F
angles 90 0 90 90 0
glyph U
angles 0 180 90 90 180
glyph N
angles 180 30 180 30 180
"""


class TestParse:
    def test_linkage_fun(self):
        fd, diags = fontdata.parse(LINKAGE_FUN)
        assert diags == []
        assert fd.font_id == "linkage" and fd.version == 1
        assert fd.glyphs["F"].angles == (90.0, 0.0, 90.0, 90.0, 0.0)

    def test_comments_and_blanks(self):
        fd, diags = fontdata.parse("# hi\n\nfont linkage 1\n\n# mid\nglyph F\nangles 90 0 90 90 0\n")
        assert fd is not None and not diags

    def test_arity_error_position(self):
        fd, diags = fontdata.parse("font linkage 1\nglyph F\nangles 90 0 90 90\n")
        assert fd is None
        assert len(diags) == 1
        assert diags[0].line == 3 and "5 values" in diags[0].message

    def test_duplicate_glyph(self):
        text = LINKAGE_FUN + "glyph F\nangles 1 2 3 4 5\n"
        fd, diags = fontdata.parse(text)
        assert fd is None
        assert any("duplicate glyph" in d.message for d in diags)

    def test_unknown_keyword(self):
        fd, diags = fontdata.parse("font linkage 1\nglyph F\nwiggle 3\n")
        assert fd is None and "unknown keyword" in diags[0].message

    def test_missing_header(self):
        fd, diags = fontdata.parse("glyph F\nangles 90 0 90 90 0\n")
        assert fd is None and "must start with" in diags[0].message

    def test_angle_range_checked(self):
        fd, diags = fontdata.parse("font linkage 1\nglyph F\nangles 90 0 90 90 361\n")
        assert fd is None and "outside [0, 360]" in diags[0].message

    def test_belt_tokens(self):
        text = "font conveyer 1\nglyph I\ndisk 0 0\ndisk 0 4\nbelt 0+ 1-\n"
        fd, diags = fontdata.parse(text)
        assert not diags
        assert fd.glyphs["I"].belt == ((0, CCW), (1, CW))

    def test_bad_belt_token_column(self):
        text = "font conveyer 1\nglyph I\ndisk 0 0\ndisk 0 4\nbelt 0+ 1x\n"
        fd, diags = fontdata.parse(text)
        assert fd is None
        assert diags[0].line == 5 and diags[0].column == 9

    def test_wrong_font_keyword(self):
        fd, diags = fontdata.parse("font linkage 1\nglyph F\ndisk 0 0\n")
        assert fd is None and "belong to the conveyer font" in diags[0].message

    def test_chain_line(self):
        text = "font hinged 1\nchain 8 Q:P R:P\nglyph A\n" + \
            "".join(f"cell {x} 0 NE {h}\n" for x in (0, 1) for h in ("first", "second"))
        fd, diags = fontdata.parse(text)
        assert not diags
        assert fd.chain.n_pieces == 8
        assert fd.chain.hinges[:3] == (("Q", "P"), ("R", "P"), ("Q", "P"))

    def test_multiple_independent_errors_one_pass(self):
        text = ("font linkage 1\n"
                "glyph F\nangles 90 0 90 90\n"        # arity
                "glyph U\nangles 0 180 90 90 999\n"   # range
                "glyph V\nwibble\n"                   # keyword
                "glyph W\nangles 1 2 3 4 x\n"         # number
                "glyph X\nangles 1 2 3 4 5\n")        # fine
        fd, diags = fontdata.parse(text)
        assert fd is None
        assert len(diags) == 4
        assert sorted(d.line for d in diags) == [3, 5, 7, 9]

    def test_vertex_records(self):
        text = ("font linkage 1\nglyph 0\n" +
                "".join(f"vertex {i} 0\n" for i in range(7)))
        fd, diags = fontdata.parse(text)
        assert not diags
        assert len(fd.glyphs["0"].vertices) == 7


class TestWrite:
    def test_roundtrip_shipped(self, shipped):
        for fid, fd in shipped.items():
            text = fontdata.write(fd)
            again, diags = fontdata.parse(text)
            assert not diags, (fid, diags)
            assert fontdata.write(again) == text

    def test_deterministic(self, shipped):
        fd = shipped["conveyer"]
        assert fontdata.write(fd).encode() == fontdata.write(fd).encode()

    def test_glyphs_sorted(self, shipped):
        text = fontdata.write(shipped["cane"])
        keys = [ln.split()[1] for ln in text.splitlines() if ln.startswith("glyph ")]
        assert keys == sorted(keys)


class TestValidate:
    def test_shipped_fonts_all_pass(self, shipped):
        for fid, fd in shipped.items():
            rep = fontdata.validate(fd)
            assert rep.ok, (fid, rep.issues)

    def test_linkage_reversal_collision_found(self):
        text = ("font linkage 1\nglyph A\nangles 10 20 30 40 50\n"
                "glyph B\nangles 50 40 30 20 10\n")
        fd, _ = fontdata.parse(text)
        rep = fontdata.validate(fd)
        assert any("'A'" in i and "'B'" in i for i in rep.issues)

    def test_conveyer_fingerprint_collision_found(self):
        text = ("font conveyer 1\nglyph A\ndisk 0 0\ndisk 0 4\n"
                "glyph B\ndisk 5 5\ndisk 5 9\n")
        fd, _ = fontdata.parse(text)
        rep = fontdata.validate(fd)
        assert any("fingerprint" in i for i in rep.issues)

    def test_hinged_cell_count_failure(self):
        text = "font hinged 1\nchain 128 Q:P R:P\nglyph A\n" + \
            "".join(f"cell {x} {y} NE {h}\n" for x in range(3) for y in range(5)
                    for h in ("first", "second"))
        fd, _ = fontdata.parse(text)
        rep = fontdata.validate(fd)
        assert any("30 cells" in i for i in rep.issues)

    def test_conveyer_bad_belt_flagged(self):
        text = "font conveyer 1\nglyph A\ndisk 0 0\ndisk 0 4\ndisk 4 0\nbelt 0+ 1+\n"
        fd, _ = fontdata.parse(text)
        rep = fontdata.validate(fd)
        assert any("fails validation" in i for i in rep.issues)

    def test_linkage_vertex_record_bars_checked(self):
        text = ("font linkage 1\nglyph 0\n" +
                "".join(f"vertex {2 * i} 0\n" for i in range(7)))
        fd, diags = fontdata.parse(text)
        assert not diags
        rep = fontdata.validate(fd)
        assert any("not unit length" in i for i in rep.issues)

    def test_cane_identical_designs_flagged(self):
        text = ("font cane 1\nglyph A\nsubcane 0.5 0 0.2 a\ntwist 0.5 4\n"
                "glyph B\nsubcane 0.5 0 0.2 a\ntwist 0.5 4\n")
        fd, _ = fontdata.parse(text)
        rep = fontdata.validate(fd)
        assert any("indistinguishable" in i for i in rep.issues)


class TestErrorRecovery:
    def test_seeded_corruptions_all_reported(self, shipped):
        base = fontdata.write(shipped["conveyer"]).splitlines()
        rng = random.Random(99)
        for _ in range(20):
            lines = list(base)
            n_errs = rng.randint(1, 10)
            corrupted = rng.sample([i for i, ln in enumerate(lines) if ln.startswith("disk")],
                                   min(n_errs, 8))
            for i in corrupted:
                lines[i] = "disk oops"
            fd, diags = fontdata.parse("\n".join(lines))
            assert fd is None
            assert len([d for d in diags if d.severity == "error"]) >= len(corrupted)


def test_find_font_file_fallback(tmp_path):
    p = fontdata.find_font_file("linkage", tmp_path)  # not there -> packaged
    assert p.name == "linkage.pft"
    with pytest.raises(fontdata.MissingFontFile):
        fontdata.load_font_file(tmp_path / "nope.pft")
