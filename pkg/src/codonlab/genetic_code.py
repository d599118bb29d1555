"""Nucleotide and codon primitives plus translation-table parsing.

A translation table is a plain-text file of ``key = value`` lines::

    name   = Standard
    id     = 1
    AAs    = FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG
    Starts = ---M---------------M---------------M----------------------------
    Base1  = TTTTTTTTTTTTTTTTCCCCCCCCCCCCCCCCAAAAAAAAAAAAAAAAGGGGGGGGGGGGGGGG
    Base2  = TTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGG
    Base3  = TCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG

AAs, Starts and the three Base lines are exactly 64 characters long;
position i describes the codon Base1[i] Base2[i] Base3[i]. The mapping is
read positionally from those lines, never from an assumed codon order: the
Base lines may list the 64 codons in any order as long as each appears
exactly once, and may use DNA (T) or RNA (U) spelling. The Starts line is
optional; '-' marks a non-start. Input is case-insensitive.

Internally everything is held in RNA spelling: mapping keys are AUCG codons
and the 21 product symbols are the 20 one-letter amino-acid codes plus '*'
for stop.
"""

import functools
from dataclasses import dataclass

from .errors import InvalidParamsError, TableFormatError, UnknownLetterError

# Base order of the canonical codon index: index = 16*b1 + 4*b2 + b3 with
# U=0, C=1, A=2, G=3 (the layout order of the table format above).
INDEX_BASE_ORDER = ("U", "C", "A", "G")

AMINO_ACIDS = "ACDEFGHIKLMNPQRSTVWY"
STOP = "*"
PRODUCT_SYMBOLS = AMINO_ACIDS + STOP

_BASE_DIGIT = {base: i for i, base in enumerate(INDEX_BASE_ORDER)}

# All 64 codons in canonical index order.
ALL_CODONS = tuple(
    b1 + b2 + b3
    for b1 in INDEX_BASE_ORDER
    for b2 in INDEX_BASE_ORDER
    for b3 in INDEX_BASE_ORDER
)


def normalize_alphabet(word: str, direction: str) -> str:
    """Convert between DNA and RNA spelling (T <-> U), uppercasing the input.

    `direction` is "dna-to-rna" or "rna-to-dna"; letters outside the source
    alphabet raise UnknownLetterError. Applying one direction and then the
    other returns the uppercased original.
    """
    if direction == "dna-to-rna":
        source, table = "ATCG", str.maketrans("T", "U")
    elif direction == "rna-to-dna":
        source, table = "AUCG", str.maketrans("U", "T")
    else:
        raise InvalidParamsError(
            f"direction must be 'dna-to-rna' or 'rna-to-dna', got {direction!r}"
        )
    word = word.upper()
    for pos, letter in enumerate(word):
        if letter not in source:
            raise UnknownLetterError(
                f"letter {letter!r} at position {pos} is not one of {source}"
            )
    return word.translate(table)


def codon_index(codon: str) -> int:
    """Canonical index 0..63 of an RNA codon (U=0, C=1, A=2, G=3 per slot)."""
    if len(codon) != 3:
        raise InvalidParamsError(f"codon must have 3 bases, got {codon!r}")
    try:
        b1, b2, b3 = (_BASE_DIGIT[base] for base in codon)
    except KeyError as exc:
        raise UnknownLetterError(f"{exc.args[0]!r} in {codon!r} is not an RNA base") from None
    return 16 * b1 + 4 * b2 + b3


def codon_from_index(index: int) -> str:
    """Inverse of codon_index."""
    if not 0 <= index < 64:
        raise InvalidParamsError(f"codon index must be in 0..63, got {index}")
    return ALL_CODONS[index]


@dataclass(frozen=True)
class GeneticCode:
    """Immutable total map from the 64 codons to amino acids or stop.

    `aas` holds the 64 product symbols in canonical codon-index order;
    `starts` is the set of start codons in RNA spelling.
    """

    name: str
    id: int | None
    aas: str
    starts: frozenset[str] = frozenset()

    def __post_init__(self):
        if len(self.aas) != 64:
            raise InvalidParamsError(f"aas must have 64 symbols, got {len(self.aas)}")
        for symbol in self.aas:
            if symbol not in PRODUCT_SYMBOLS:
                raise InvalidParamsError(f"unknown product symbol {symbol!r}")
        for codon in self.starts:
            codon_index(codon)

    def translate(self, codon: str) -> str:
        """Product symbol for a codon; accepts DNA or RNA spelling, any case."""
        codon = codon.upper().replace("T", "U")
        return self.aas[codon_index(codon)]

    def mapping(self) -> dict[str, str]:
        """The full codon -> product dictionary (RNA spelling, index order)."""
        return {codon: self.aas[i] for i, codon in enumerate(ALL_CODONS)}

    @property
    def stop_codons(self) -> tuple[str, ...]:
        return tuple(c for i, c in enumerate(ALL_CODONS) if self.aas[i] == STOP)

    @property
    def sense_codons(self) -> tuple[str, ...]:
        return tuple(c for i, c in enumerate(ALL_CODONS) if self.aas[i] != STOP)

    @property
    def amino_acid_image(self) -> frozenset[str]:
        """Distinct amino acids the code produces (stop excluded)."""
        return frozenset(self.aas) - {STOP}


_FIELD_NAMES = ("name", "id", "AAs", "Starts", "Base1", "Base2", "Base3")
_WIDE_FIELDS = ("AAs", "Starts", "Base1", "Base2", "Base3")


_CANONICAL_FIELD = {name.lower(): name for name in _FIELD_NAMES}


def _scan_fields(text: str) -> dict[str, tuple[str, int, int]]:
    """Split table text into key -> (value, line, value column), validating shape."""
    fields = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        raw_key, eq, rhs = raw.partition("=")
        if not eq:
            raise TableFormatError("expected a 'key = value' line", line=line_no)
        key = _CANONICAL_FIELD.get(raw_key.strip().lower())
        if key is None:
            raise TableFormatError(
                f"unknown field {raw_key.strip()!r}", line=line_no, column=1
            )
        if key in fields:
            raise TableFormatError(f"duplicate field {key!r}", line=line_no, column=1)
        value = rhs.strip()
        column = raw.index("=") + 2 + (len(rhs) - len(rhs.lstrip()))
        fields[key] = (value, line_no, column)
    return fields


def _checked_value(fields, key, allowed: str) -> tuple[str, int, int]:
    value, line, column = fields[key]
    value = value.upper()
    if len(value) != 64:
        raise TableFormatError(
            f"{key} must be 64 characters, got {len(value)}", line=line, column=column
        )
    for i, char in enumerate(value):
        if char not in allowed:
            raise TableFormatError(
                f"unknown letter {char!r} in {key}", line=line, column=column + i
            )
    return value, line, column


def parse_table(text: str) -> GeneticCode:
    """Parse a translation table from its file content.

    Raises TableFormatError with 1-based line/column positions on any
    violation: malformed lines, wrong field width, unknown letters, missing
    fields, or Base lines that do not list each codon exactly once.
    """
    fields = _scan_fields(text)
    for key in ("AAs", "Base1", "Base2", "Base3"):
        if key not in fields:
            raise TableFormatError(f"missing field {key!r}")

    aas_value, _, _ = _checked_value(fields, "AAs", PRODUCT_SYMBOLS)
    base1, base1_line, base1_column = _checked_value(fields, "Base1", "TCAGU")
    base2, _, _ = _checked_value(fields, "Base2", "TCAGU")
    base3, _, _ = _checked_value(fields, "Base3", "TCAGU")

    starts_value = None
    if "Starts" in fields:
        starts_value, _, _ = _checked_value(fields, "Starts", "-M")

    name = fields["name"][0] if "name" in fields else "Custom"
    table_id = None
    if "id" in fields:
        raw_id, id_line, id_column = fields["id"]
        try:
            table_id = int(raw_id)
        except ValueError:
            raise TableFormatError(
                f"id must be an integer, got {raw_id!r}", line=id_line, column=id_column
            ) from None

    aas = [None] * 64
    starts = set()
    for i in range(64):
        codon = (base1[i] + base2[i] + base3[i]).replace("T", "U")
        idx = codon_index(codon)
        if aas[idx] is not None:
            raise TableFormatError(
                f"codon {codon} listed more than once in the Base lines",
                line=base1_line,
                column=base1_column + i,
            )
        aas[idx] = aas_value[i]
        if starts_value is not None and starts_value[i] == "M":
            starts.add(codon)
    return GeneticCode(name=name, id=table_id, aas="".join(aas), starts=frozenset(starts))


def serialize_table(code: GeneticCode) -> str:
    """Render a code in the table-file format (DNA spelling, canonical order).

    parse_table(serialize_table(code)) == code for every valid code.
    """
    lines = [f"{'name':<6} = {code.name}"]
    if code.id is not None:
        lines.append(f"{'id':<6} = {code.id}")
    starts_line = "".join("M" if codon in code.starts else "-" for codon in ALL_CODONS)
    for key, value in (
        ("AAs", code.aas),
        ("Starts", starts_line),
        ("Base1", "".join(c[0] for c in ALL_CODONS)),
        ("Base2", "".join(c[1] for c in ALL_CODONS)),
        ("Base3", "".join(c[2] for c in ALL_CODONS)),
    ):
        if key.startswith("Base"):
            value = value.replace("U", "T")
        lines.append(f"{key:<6} = {value}")
    return "\n".join(lines) + "\n"


STANDARD_TABLE_TEXT = """\
name   = Standard
id     = 1
AAs    = FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG
Starts = ---M---------------M---------------M----------------------------
Base1  = TTTTTTTTTTTTTTTTCCCCCCCCCCCCCCCCAAAAAAAAAAAAAAAAGGGGGGGGGGGGGGGG
Base2  = TTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGG
Base3  = TCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG
"""

BUILTIN_TABLE_TEXTS = {"standard": STANDARD_TABLE_TEXT}


@functools.lru_cache(maxsize=None)
def builtin_code(name: str = "standard") -> GeneticCode:
    """A built-in code by name; only "standard" ships currently."""
    try:
        text = BUILTIN_TABLE_TEXTS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_TABLE_TEXTS))
        raise InvalidParamsError(f"unknown builtin code {name!r} (known: {known})") from None
    return parse_table(text)


def builtin_standard_code() -> GeneticCode:
    """The standard nuclear genetic code (translation table 1)."""
    return builtin_code("standard")
