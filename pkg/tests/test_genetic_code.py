"""Translation-table parsing, serialization and codon indexing.

The oracle is a test-local copy of the standard table's strings, turned
into a codon -> product dict by walking the Base columns directly. The
library under test never sees this dict; any disagreement between the
two readings of the same 64 columns is a bug.
"""

import random

import pytest

from codonlab import (
    ALL_CODONS,
    AMINO_ACIDS,
    GeneticCode,
    InvalidParamsError,
    TableFormatError,
    UnknownLetterError,
    builtin_code,
    builtin_standard_code,
    codon_from_index,
    codon_index,
    normalize_alphabet,
    parse_table,
    serialize_table,
)
from codonlab.genetic_code import PRODUCT_SYMBOLS, STANDARD_TABLE_TEXT

# Frozen copy of translation table 1, kept separate from the package's own.
ORACLE_AAS = "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG"
ORACLE_STARTS = "---M---------------M---------------M----------------------------"
ORACLE_BASE1 = "TTTTTTTTTTTTTTTTCCCCCCCCCCCCCCCCAAAAAAAAAAAAAAAAGGGGGGGGGGGGGGGG"
ORACLE_BASE2 = "TTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGGTTTTCCCCAAAAGGGG"
ORACLE_BASE3 = "TCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAGTCAG"


def oracle_mapping():
    """RNA codon -> product, read column by column from the frozen strings."""
    table = {}
    for i in range(64):
        codon = (ORACLE_BASE1[i] + ORACLE_BASE2[i] + ORACLE_BASE3[i]).replace("T", "U")
        table[codon] = ORACLE_AAS[i]
    return table


def oracle_starts():
    return {
        (ORACLE_BASE1[i] + ORACLE_BASE2[i] + ORACLE_BASE3[i]).replace("T", "U")
        for i in range(64)
        if ORACLE_STARTS[i] == "M"
    }


# --- the standard code ------------------------------------------------------


def test_standard_code_translates_all_codons_like_the_oracle():
    code = builtin_standard_code()
    expected = oracle_mapping()
    for codon in ALL_CODONS:
        assert code.translate(codon) == expected[codon]
    assert code.mapping() == expected


def test_standard_code_counts():
    code = builtin_standard_code()
    expected = oracle_mapping()
    stops = sorted(c for c, p in expected.items() if p == "*")
    assert sorted(code.stop_codons) == stops == ["UAA", "UAG", "UGA"]
    assert len(code.sense_codons) == 64 - len(stops) == 61
    assert code.amino_acid_image == set(AMINO_ACIDS)
    assert len(code.amino_acid_image) == 20


def test_standard_code_starts():
    code = builtin_standard_code()
    assert code.starts == oracle_starts() == {"UUG", "CUG", "AUG"}


def test_standard_code_metadata():
    code = builtin_standard_code()
    assert code.name == "Standard"
    assert code.id == 1


def test_translate_accepts_dna_and_lowercase():
    code = builtin_standard_code()
    assert code.translate("ATG") == code.translate("AUG") == "M"
    assert code.translate("taa") == "*"
    assert code.translate("ggg") == "G"


def test_builtin_lookup():
    assert builtin_code("standard") is builtin_standard_code()
    with pytest.raises(InvalidParamsError):
        builtin_code("martian")


# --- codon indexing ---------------------------------------------------------


def test_codon_index_is_a_bijection():
    seen = set()
    for i, codon in enumerate(ALL_CODONS):
        assert codon_index(codon) == i
        assert codon_from_index(i) == codon
        seen.add(i)
    assert seen == set(range(64))


def test_codon_index_corner_values():
    assert codon_index("UUU") == 0
    assert codon_index("UUC") == 1
    assert codon_index("GGG") == 63


def test_codon_index_rejects_bad_input():
    with pytest.raises(InvalidParamsError):
        codon_index("AU")
    with pytest.raises(UnknownLetterError):
        codon_index("ATG")  # DNA spelling is not an index key
    with pytest.raises(InvalidParamsError):
        codon_from_index(64)
    with pytest.raises(InvalidParamsError):
        codon_from_index(-1)


# --- alphabet normalization -------------------------------------------------


def test_normalize_directions():
    assert normalize_alphabet("acgt", "dna-to-rna") == "ACGU"
    assert normalize_alphabet("ACGU", "rna-to-dna") == "ACGT"


def test_normalize_round_trips():
    for codon in ALL_CODONS:
        dna = normalize_alphabet(codon, "rna-to-dna")
        assert normalize_alphabet(dna, "dna-to-rna") == codon


def test_normalize_rejects_cross_alphabet_letters():
    with pytest.raises(UnknownLetterError):
        normalize_alphabet("AUG", "dna-to-rna")  # U is not a DNA letter
    with pytest.raises(UnknownLetterError):
        normalize_alphabet("ATG", "rna-to-dna")
    with pytest.raises(InvalidParamsError):
        normalize_alphabet("ATG", "sideways")


# --- parsing ----------------------------------------------------------------


def test_parse_builtin_text_round_trips_byte_identically():
    code = builtin_standard_code()
    assert serialize_table(code) == STANDARD_TABLE_TEXT
    assert parse_table(serialize_table(code)) == code


def test_parse_accepts_rna_spelling_and_mixed_case():
    # respell only the Base lines; AAs has a genuine T (threonine)
    text = "\n".join(
        line.replace("T", "U") if line.startswith("Base") else line
        for line in STANDARD_TABLE_TEXT.splitlines()
    )
    assert parse_table(text).mapping() == builtin_standard_code().mapping()
    lowered = "\n".join(
        line.lower() if line.startswith(("Base", "AAs", "Starts")) else line
        for line in STANDARD_TABLE_TEXT.splitlines()
    )
    assert parse_table(lowered) == builtin_standard_code()


def test_parse_reads_columns_positionally():
    # shuffling the 64 columns in lockstep must not change the parsed code
    rng = random.Random(11)
    order = list(range(64))
    rng.shuffle(order)
    text = "\n".join(
        [
            "name  = Standard",
            "id    = 1",
            "AAs    = " + "".join(ORACLE_AAS[i] for i in order),
            "Starts = " + "".join(ORACLE_STARTS[i] for i in order),
            "Base1  = " + "".join(ORACLE_BASE1[i] for i in order),
            "Base2  = " + "".join(ORACLE_BASE2[i] for i in order),
            "Base3  = " + "".join(ORACLE_BASE3[i] for i in order),
        ]
    )
    assert parse_table(text) == builtin_standard_code()


def test_parse_without_optional_fields():
    text = "\n".join(
        [
            "AAs    = " + ORACLE_AAS,
            "Base1  = " + ORACLE_BASE1,
            "Base2  = " + ORACLE_BASE2,
            "Base3  = " + ORACLE_BASE3,
        ]
    )
    code = parse_table(text)
    assert code.name == "Custom"
    assert code.id is None
    assert code.starts == frozenset()
    assert code.mapping() == oracle_mapping()


def test_parse_ignores_blank_lines():
    text = "\n\n" + STANDARD_TABLE_TEXT.replace("\nBase1", "\n\nBase1") + "\n\n"
    assert parse_table(text) == builtin_standard_code()


def random_test_code(seed):
    """A valid but meaningless code, with random starts, for round trips."""
    rng = random.Random(seed)
    aas = "".join(rng.choice(PRODUCT_SYMBOLS) for _ in range(64))
    starts = frozenset(rng.sample(ALL_CODONS, rng.randrange(0, 5)))
    table_id = rng.choice([None, rng.randrange(1, 100)])
    return GeneticCode(name=f"scrambled-{seed}", id=table_id, aas=aas, starts=starts)


@pytest.mark.parametrize("seed", [0, 1, 17, 99])
def test_serialize_parse_round_trip_on_random_codes(seed):
    code = random_test_code(seed)
    assert parse_table(serialize_table(code)) == code


def test_round_trip_over_many_seeds():
    for seed in range(100):
        code = random_test_code(seed)
        assert parse_table(serialize_table(code)) == code


# --- parse errors carry positions -------------------------------------------


def replace_line(text, key, new_line):
    return "\n".join(
        new_line if line.startswith(key) else line for line in text.splitlines()
    )


def test_short_aas_line_reports_position():
    bad = replace_line(STANDARD_TABLE_TEXT, "AAs", "AAs    = " + ORACLE_AAS[:63])
    with pytest.raises(TableFormatError) as err:
        parse_table(bad)
    assert err.value.line == 3
    assert "64" in str(err.value)


def test_unknown_product_symbol_reports_column():
    mangled = ORACLE_AAS[:10] + "J" + ORACLE_AAS[11:]
    bad = replace_line(STANDARD_TABLE_TEXT, "AAs", "AAs    = " + mangled)
    with pytest.raises(TableFormatError) as err:
        parse_table(bad)
    assert err.value.line == 3
    assert err.value.column == 10 + 10  # value starts at column 10
    assert "'J'" in str(err.value)


def test_unknown_base_letter_reports_position():
    bad = replace_line(STANDARD_TABLE_TEXT, "Base3", "Base3  = " + "X" * 64)
    with pytest.raises(TableFormatError) as err:
        parse_table(bad)
    assert err.value.line == 7
    assert err.value.column == 10


def test_missing_field():
    bad = replace_line(STANDARD_TABLE_TEXT, "Base2", "")
    with pytest.raises(TableFormatError, match="missing field 'Base2'"):
        parse_table(bad)


def test_duplicate_field():
    bad = STANDARD_TABLE_TEXT + "id     = 2\n"
    with pytest.raises(TableFormatError) as err:
        parse_table(bad)
    assert "duplicate field 'id'" in str(err.value)
    assert err.value.line == 8


def test_unknown_field():
    bad = STANDARD_TABLE_TEXT + "Codons = 64\n"
    with pytest.raises(TableFormatError, match="unknown field"):
        parse_table(bad)


def test_line_without_equals_sign():
    with pytest.raises(TableFormatError) as err:
        parse_table("just some words\n")
    assert err.value.line == 1


def test_non_integer_id():
    bad = replace_line(STANDARD_TABLE_TEXT, "id", "id     = one")
    with pytest.raises(TableFormatError, match="id must be an integer"):
        parse_table(bad)


def test_repeated_codon_across_base_lines():
    # making column 1 read TTT again collides with column 0
    mangled = ORACLE_BASE3[0] + "T" + ORACLE_BASE3[2:]
    bad = replace_line(STANDARD_TABLE_TEXT, "Base3", "Base3  = " + mangled)
    with pytest.raises(TableFormatError, match="more than once"):
        parse_table(bad)


def test_bad_starts_letter():
    bad = replace_line(STANDARD_TABLE_TEXT, "Starts", "Starts = " + "S" * 64)
    with pytest.raises(TableFormatError, match="unknown letter"):
        parse_table(bad)


# --- GeneticCode validation -------------------------------------------------


def test_code_rejects_wrong_aas_length():
    with pytest.raises(InvalidParamsError):
        GeneticCode(name="x", id=None, aas="M" * 63)


def test_code_rejects_unknown_product_symbols():
    with pytest.raises(InvalidParamsError):
        GeneticCode(name="x", id=None, aas="M" * 63 + "J")


def test_code_rejects_invalid_start_codons():
    with pytest.raises((InvalidParamsError, UnknownLetterError)):
        GeneticCode(name="x", id=None, aas="M" * 64, starts=frozenset({"ATG"}))
