"""Font data model and the line-oriented `.pft` format.

One file holds one font.  The grammar is line based: `#` lines are comments,
`font <id> <version>` must come first, `glyph <char>` opens a record, and
payload lines are keyword-led.  Parsing is total: it never throws on bad
input, it collects diagnostics with exact line/column positions and returns
no FontData when any error was seen.

Payload keywords by font:
    linkage   angles a1 a2 a3 a4 a5     stored verbatim (0 and 360 both legal)
              vertex x y                seven of these for puzzle chains
    conveyer  disk x y                  unit disk center
              belt 0+ 2- 1+             winding: disk index and wrap sign
    maze      size w h                  grid bounding box
              wall x1 y1 x2 y2          unit lattice wall edge
    hinged    chain n Q:P R:P ...       font-level: cyclic exit:entry hinge pattern
              cell x y NE|NW first|second
    cane      subcane rho phi r color
              twist omega length
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cane import CaneCrossSection, Subcane, TwistParams
from .conveyer import CCW, CW, check_disk_set, check_spec, compute_belt, fingerprint, validate_belt
from .errors import MissingFontFile
from .geometry import Point2, dist
from .hinged import HingedChain, check_cell, validate_polyabolo
from .linkage import LinkageFont, check_angle_sequence
from .maze import GridMaze

FONT_IDS = ("linkage", "conveyer", "maze", "hinged", "cane")
FORMAT_VERSION = 1


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: str = "error"

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


@dataclass(frozen=True)
class LinkageRecord:
    angles: tuple | None = None
    vertices: tuple | None = None


@dataclass(frozen=True)
class ConveyerRecord:
    disks: tuple
    belt: tuple | None = None


@dataclass(frozen=True)
class CaneRecord:
    cross_section: CaneCrossSection
    twist: TwistParams


@dataclass
class FontData:
    font_id: str
    version: int
    glyphs: dict
    chain: HingedChain | None = None

    def letters(self) -> list[str]:
        return sorted(self.glyphs)


# -- parser -------------------------------------------------------------------

class _Tok:
    __slots__ = ("text", "col")

    def __init__(self, text: str, col: int):
        self.text = text
        self.col = col


def _tokenize(line: str) -> list[_Tok]:
    toks = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        toks.append(_Tok(line[i:j], i + 1))
        i = j
    return toks


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.diags: list[ParseDiagnostic] = []
        self.font_id: str | None = None
        self.version: int | None = None
        self.chain: HingedChain | None = None
        self.glyphs: dict = {}
        self.cur_char: str | None = None
        self.cur_line = 0
        self.cur: dict = {}
        self.cur_diag_mark = 0

    def error(self, line: int, col: int, msg: str) -> None:
        self.diags.append(ParseDiagnostic(line, col, msg))

    def _num(self, tok: _Tok, line: int, integer: bool = False):
        try:
            return int(tok.text) if integer else float(tok.text)
        except ValueError:
            kind = "integer" if integer else "number"
            self.error(line, tok.col, f"expected {kind}, got {tok.text!r}")
            return None

    def finish_glyph(self) -> None:
        if self.cur_char is None:
            return
        char, payload, line = self.cur_char, self.cur, self.cur_line
        glyph_had_errors = len(self.diags) > self.cur_diag_mark
        self.cur_char, self.cur = None, {}
        if glyph_had_errors:
            return  # don't cascade completeness complaints onto broken payloads
        fid = self.font_id
        try:
            if fid == "linkage":
                angles = payload.get("angles")
                vertices = payload.get("vertices")
                if angles is None and vertices is None:
                    self.error(line, 1, f"glyph {char!r} needs an 'angles' or 'vertex' payload")
                    return
                if vertices is not None and len(vertices) != 7:
                    self.error(line, 1, f"glyph {char!r} has {len(vertices)} vertices, expected 7")
                    return
                rec = LinkageRecord(angles=angles, vertices=tuple(vertices) if vertices else None)
            elif fid == "conveyer":
                disks = tuple(payload.get("disks", ()))
                if not disks:
                    self.error(line, 1, f"glyph {char!r} has no disks")
                    return
                rec = ConveyerRecord(disks=disks, belt=payload.get("belt"))
            elif fid == "maze":
                if "size" not in payload:
                    self.error(line, 1, f"glyph {char!r} is missing its 'size' line")
                    return
                w, h = payload["size"]
                rec = GridMaze.from_edges(w, h, payload.get("walls", ()))
            elif fid == "hinged":
                rec = tuple(payload.get("cells", ()))
                if not rec:
                    self.error(line, 1, f"glyph {char!r} has no cells")
                    return
            elif fid == "cane":
                if "twist" not in payload:
                    self.error(line, 1, f"glyph {char!r} is missing its 'twist' line")
                    return
                rec = CaneRecord(CaneCrossSection(tuple(payload.get("subcanes", ()))),
                                 payload["twist"])
            else:  # pragma: no cover - guarded by header handling
                return
        except ValueError as exc:
            self.error(line, 1, f"glyph {char!r}: {exc}")
            return
        self.glyphs[char] = rec

    def parse(self) -> tuple[FontData | None, list[ParseDiagnostic]]:
        for lineno, raw in enumerate(self.lines, start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            toks = _tokenize(raw)
            head = toks[0]
            if self.font_id is None and head.text != "font":
                self.error(lineno, head.col, "file must start with a 'font <id> <version>' line")
                return None, self.diags
            handler = getattr(self, f"_kw_{head.text}", None)
            if handler is None:
                self.error(lineno, head.col, f"unknown keyword {head.text!r}")
                continue
            handler(toks, lineno)
        self.finish_glyph()
        if any(d.severity == "error" for d in self.diags):
            return None, self.diags
        fd = FontData(self.font_id, self.version, self.glyphs, self.chain)
        return fd, self.diags

    # keyword handlers ---------------------------------------------------

    def _kw_font(self, toks, lineno):
        if self.font_id is not None:
            self.error(lineno, toks[0].col, "duplicate 'font' header")
            return
        if len(toks) != 3:
            self.error(lineno, toks[0].col, "'font' needs an id and a version")
            return
        if toks[1].text not in FONT_IDS:
            self.error(lineno, toks[1].col, f"unknown font id {toks[1].text!r}")
            return
        version = self._num(toks[2], lineno, integer=True)
        if version is None:
            return
        self.font_id = toks[1].text
        self.version = version

    def _kw_glyph(self, toks, lineno):
        self.finish_glyph()
        if len(toks) != 2 or len(toks[1].text) != 1:
            col = toks[1].col if len(toks) > 1 else toks[0].col
            self.error(lineno, col, "'glyph' needs a single-character key")
            return
        char = toks[1].text
        if char in self.glyphs:
            self.error(lineno, toks[1].col, f"duplicate glyph {char!r}")
            return
        self.cur_char = char
        self.cur_line = lineno
        self.cur = {}
        self.cur_diag_mark = len(self.diags)

    def _payload_guard(self, toks, lineno, font_id) -> bool:
        if self.font_id != font_id:
            self.error(lineno, toks[0].col,
                       f"{toks[0].text!r} lines belong to the {font_id} font")
            return False
        if toks[0].text == "chain":
            return True
        if self.cur_char is None:
            self.error(lineno, toks[0].col, f"{toks[0].text!r} line outside any glyph")
            return False
        return True

    def _kw_angles(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "linkage"):
            return
        if len(toks) != 6:
            self.error(lineno, toks[0].col, f"'angles' needs exactly 5 values, got {len(toks) - 1}")
            return
        vals = [self._num(t, lineno) for t in toks[1:]]
        if any(v is None for v in vals):
            return
        for t, v in zip(toks[1:], vals):
            if not 0.0 <= v <= 360.0:
                self.error(lineno, t.col, f"angle {v} outside [0, 360]")
                return
        self.cur["angles"] = tuple(vals)

    def _kw_vertex(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "linkage"):
            return
        if len(toks) != 3:
            self.error(lineno, toks[0].col, "'vertex' needs x and y")
            return
        x = self._num(toks[1], lineno)
        y = self._num(toks[2], lineno)
        if x is None or y is None:
            return
        self.cur.setdefault("vertices", []).append(Point2(x, y))

    def _kw_disk(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "conveyer"):
            return
        if len(toks) != 3:
            self.error(lineno, toks[0].col, "'disk' needs x and y")
            return
        x = self._num(toks[1], lineno)
        y = self._num(toks[2], lineno)
        if x is None or y is None:
            return
        self.cur.setdefault("disks", []).append(Point2(x, y))

    def _kw_belt(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "conveyer"):
            return
        if len(toks) < 2:
            self.error(lineno, toks[0].col, "'belt' needs at least one winding entry")
            return
        winding = []
        for t in toks[1:]:
            body, sign = t.text[:-1], t.text[-1:]
            if sign not in "+-" or not body.isdigit():
                self.error(lineno, t.col, f"belt entry must look like '3+' or '0-', got {t.text!r}")
                return
            winding.append((int(body), CCW if sign == "+" else CW))
        if "belt" in self.cur:
            self.error(lineno, toks[0].col, "glyph already has a belt")
            return
        self.cur["belt"] = tuple(winding)

    def _kw_size(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "maze"):
            return
        if len(toks) != 3:
            self.error(lineno, toks[0].col, "'size' needs width and height")
            return
        w = self._num(toks[1], lineno, integer=True)
        h = self._num(toks[2], lineno, integer=True)
        if w is None or h is None:
            return
        self.cur["size"] = (w, h)

    def _kw_wall(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "maze"):
            return
        if len(toks) != 5:
            self.error(lineno, toks[0].col, "'wall' needs x1 y1 x2 y2")
            return
        vals = [self._num(t, lineno, integer=True) for t in toks[1:]]
        if any(v is None for v in vals):
            return
        self.cur.setdefault("walls", []).append(tuple(vals))

    def _kw_chain(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "hinged"):
            return
        if self.chain is not None:
            self.error(lineno, toks[0].col, "duplicate 'chain' line")
            return
        if len(toks) < 3:
            self.error(lineno, toks[0].col,
                       "'chain' needs a piece count and at least one exit:entry pattern")
            return
        n = self._num(toks[1], lineno, integer=True)
        if n is None:
            return
        pattern = []
        for t in toks[2:]:
            parts = t.text.split(":")
            if len(parts) != 2 or any(p not in ("R", "P", "Q") for p in parts):
                self.error(lineno, t.col,
                           f"hinge pattern token must look like 'Q:P', got {t.text!r}")
                return
            pattern.append((parts[0], parts[1]))
        try:
            self.chain = HingedChain.cyclic(n, pattern)
        except ValueError as exc:
            self.error(lineno, toks[1].col, str(exc))

    def _kw_cell(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "hinged"):
            return
        if len(toks) != 5:
            self.error(lineno, toks[0].col, "'cell' needs x y NE|NW first|second")
            return
        x = self._num(toks[1], lineno, integer=True)
        y = self._num(toks[2], lineno, integer=True)
        if x is None or y is None:
            return
        try:
            cell = check_cell((x, y, toks[3].text, toks[4].text))
        except ValueError as exc:
            self.error(lineno, toks[3].col, str(exc))
            return
        self.cur.setdefault("cells", []).append(cell)

    def _kw_subcane(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "cane"):
            return
        if len(toks) != 5:
            self.error(lineno, toks[0].col, "'subcane' needs rho phi r color")
            return
        rho = self._num(toks[1], lineno)
        phi = self._num(toks[2], lineno)
        r = self._num(toks[3], lineno)
        if rho is None or phi is None or r is None:
            return
        color = toks[4].text
        try:
            sub = Subcane(rho, phi, r, color if color.startswith("strand_") else f"strand_{color}")
        except ValueError as exc:
            self.error(lineno, toks[1].col, str(exc))
            return
        self.cur.setdefault("subcanes", []).append(sub)

    def _kw_twist(self, toks, lineno):
        if not self._payload_guard(toks, lineno, "cane"):
            return
        if len(toks) != 3:
            self.error(lineno, toks[0].col, "'twist' needs omega and length")
            return
        omega = self._num(toks[1], lineno)
        length = self._num(toks[2], lineno)
        if omega is None or length is None:
            return
        try:
            self.cur["twist"] = TwistParams(omega, length)
        except ValueError as exc:
            self.error(lineno, toks[1].col, str(exc))


def parse(text: str) -> tuple[FontData | None, list[ParseDiagnostic]]:
    """Parse `.pft` text; on any error returns (None, diagnostics)."""
    return _Parser(text).parse()


# -- writer -------------------------------------------------------------------

def _num_text(v: float) -> str:
    f = float(v)
    return str(int(f)) if f.is_integer() else repr(f)


def write(fd: FontData) -> str:
    """Canonical serialization: glyphs sorted by character, deterministic."""
    lines = [f"font {fd.font_id} {fd.version}"]
    if fd.font_id == "hinged" and fd.chain is not None:
        hinges = fd.chain.hinges
        period = len(hinges)
        for p in range(1, len(hinges) + 1):
            if all(hinges[k] == hinges[k % p] for k in range(len(hinges))):
                period = p
                break
        toks = " ".join(f"{ex}:{en}" for ex, en in hinges[:period]) if hinges else "Q:P"
        lines.append(f"chain {fd.chain.n_pieces} {toks}")
    for char in sorted(fd.glyphs):
        rec = fd.glyphs[char]
        lines.append(f"glyph {char}")
        if fd.font_id == "linkage":
            if rec.angles is not None:
                lines.append("angles " + " ".join(_num_text(a) for a in rec.angles))
            else:
                for v in rec.vertices:
                    lines.append(f"vertex {_num_text(v[0])} {_num_text(v[1])}")
        elif fd.font_id == "conveyer":
            for d in rec.disks:
                lines.append(f"disk {_num_text(d[0])} {_num_text(d[1])}")
            if rec.belt is not None:
                lines.append("belt " + " ".join(f"{i}{'+' if o == CCW else '-'}"
                                                for i, o in rec.belt))
        elif fd.font_id == "maze":
            lines.append(f"size {rec.width} {rec.height}")
            for (x1, y1), (x2, y2) in rec.sorted_walls():
                lines.append(f"wall {x1} {y1} {x2} {y2}")
        elif fd.font_id == "hinged":
            for c in rec:
                lines.append(f"cell {c.sx} {c.sy} {c.diagonal} {c.half}")
        elif fd.font_id == "cane":
            for s in rec.cross_section.subcanes:
                lines.append(f"subcane {_num_text(s.rho)} {_num_text(s.phi)} "
                             f"{_num_text(s.radius)} {s.color}")
            lines.append(f"twist {_num_text(rec.twist.omega)} {_num_text(rec.twist.length)}")
    return "\n".join(lines) + "\n"


# -- validation ---------------------------------------------------------------

@dataclass
class DataReport:
    issues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, msg: str) -> None:
        self.issues.append(msg)


def validate(fd: FontData) -> DataReport:
    """Per-module payload checks plus the cross-glyph uniqueness conditions."""
    report = DataReport()
    if fd.font_id == "linkage":
        seqs = {}
        for char, rec in sorted(fd.glyphs.items()):
            if rec.angles is not None:
                try:
                    seqs[char] = check_angle_sequence(rec.angles)
                except ValueError as exc:
                    report.add(f"glyph {char!r}: {exc}")
            else:
                for i in range(6):
                    if abs(dist(rec.vertices[i], rec.vertices[i + 1]) - 1.0) > 1e-6:
                        report.add(f"glyph {char!r}: bar {i} is not unit length")
        font = LinkageFont(seqs)
        for l1, l2 in font.uniqueness_failures():
            report.add(f"letters {l1!r} and {l2!r} share a sequence up to reversal")
    elif fd.font_id == "conveyer":
        prints = {}
        for char, rec in sorted(fd.glyphs.items()):
            try:
                disks = check_disk_set(rec.disks)
            except ValueError as exc:
                report.add(f"glyph {char!r}: {exc}")
                continue
            prints.setdefault(fingerprint(disks), []).append(char)
            if rec.belt is not None:
                try:
                    check_spec(rec.belt, len(disks))
                    path = compute_belt(disks, rec.belt)
                except Exception as exc:
                    report.add(f"glyph {char!r}: belt does not realize: {exc}")
                    continue
                vr = validate_belt(disks, path)
                if not vr.all_ok:
                    report.add(f"glyph {char!r}: belt fails validation: {vr}")
        for key, chars in prints.items():
            if len(chars) > 1:
                report.add(f"glyphs {chars} share a disk configuration fingerprint")
    elif fd.font_id == "maze":
        pass  # GridMaze.from_edges already enforced the structural invariants
    elif fd.font_id == "hinged":
        if fd.chain is None:
            report.add("hinged font is missing its 'chain' line")
        for char, rec in sorted(fd.glyphs.items()):
            pr = validate_polyabolo(rec, 32)
            if pr.cell_count != 32:
                report.add(f"glyph {char!r}: has {pr.cell_count} cells, expected 32")
            if not pr.connected:
                report.add(f"glyph {char!r}: cells are not edge-connected")
            if not pr.no_overlap:
                report.add(f"glyph {char!r}: cells overlap")
            if pr.ok and abs(pr.area - 16.0) > 1e-12:
                report.add(f"glyph {char!r}: area {pr.area} != 16")
        if fd.chain is not None and fd.chain.n_pieces != 128:
            report.add(f"chain has {fd.chain.n_pieces} pieces, expected 128")
    elif fd.font_id == "cane":
        designs = {}
        for char, rec in sorted(fd.glyphs.items()):
            key = tuple(sorted((round(s.rho, 9), round(s.phi, 9), round(s.radius, 9), s.color)
                               for s in rec.cross_section.subcanes))
            key = key + ((round(rec.twist.omega, 9),))
            designs.setdefault(key, []).append(char)
        for key, chars in designs.items():
            if len(chars) > 1:
                report.add(f"cane glyphs {chars} are indistinguishable")
    else:
        report.add(f"unknown font id {fd.font_id!r}")
    return report


# -- file helpers ---------------------------------------------------------------

def load_font_text(text: str) -> FontData:
    fd, diags = parse(text)
    if fd is None:
        raise ValueError("font data has errors:\n" + "\n".join(str(d) for d in diags))
    return fd


def load_font_file(path) -> FontData:
    from pathlib import Path
    p = Path(path)
    if not p.exists():
        raise MissingFontFile(f"no such font file: {p}")
    return load_font_text(p.read_text(encoding="utf-8"))


def builtin_font_dir():
    from importlib.resources import files
    return files("puzzlefonts") / "fonts"


def find_font_file(font_id: str, font_dir=None):
    """Resolve `<font_id>.pft` in font_dir, falling back to the packaged fonts."""
    from pathlib import Path
    name = f"{font_id}.pft"
    if font_dir is not None:
        cand = Path(font_dir) / name
        if cand.exists():
            return cand
    default = Path("fonts") / name
    if default.exists():
        return default
    packaged = builtin_font_dir() / name
    if packaged.is_file():
        return packaged
    raise MissingFontFile(f"cannot find {name} (searched {font_dir or './fonts'} and packaged data)")
