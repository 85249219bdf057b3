import json
from importlib import resources

import pytest
from hypothesis import given, strategies as st

from sceneloom.grammar import (
    AMBIGUOUS_PREFIX,
    CANONICALIZED_OPTION,
    UNKNOWN_GIN_FILE,
    UNKNOWN_OPTION,
    CommandParseError,
    Grammar,
    NotExecutable,
    OptionSpec,
    canonicalize,
    check_command,
    load_grammar,
    parse_command,
    validate,
)
from generators import PIPELINE_GINS, SCENE_GINS, generate_command
from mutations import BASE, MUTATION_CASES


def load_few_shots():
    raw = resources.files("sceneloom.data").joinpath("few_shots.json").read_text("utf-8")
    return json.loads(raw)["pairs"]


def test_whitelist_sizes_and_content():
    grammar = load_grammar()
    assert grammar.whitelists["scene"] == frozenset(SCENE_GINS)
    assert grammar.whitelists["pipeline"] == frozenset(PIPELINE_GINS)
    assert len(grammar.whitelists["scene"]) == 33
    assert len(grammar.whitelists["pipeline"]) == 25


def test_option_table_shape():
    grammar = load_grammar()
    assert len(grammar.options) == 16
    assert grammar.invocation_head == "python -m Infinigen.datagen.manage_jobs"
    for opt in grammar.options:
        assert (opt.value_kind == "enum") == (opt.enum_values is not None)
        if opt.whitelist:
            assert opt.long_name in ("--configs", "--pipeline_configs")


def test_all_few_shot_commands_executable():
    for pair in load_few_shots():
        report = check_command(pair["command"])
        assert report.executable, (pair["command"], report.errors)


def test_few_shot_one_verbatim_is_invalid():
    pairs = load_few_shots()
    verbatim = pairs[0]["command_verbatim"]
    report = check_command(verbatim)
    assert not report.executable
    assert report.errors[0].code == UNKNOWN_OPTION


def test_few_shot_two_canonicalizes_config():
    pairs = load_few_shots()
    ast = parse_command(pairs[1]["command"])
    notes = [d for d in ast.diagnostics if d.code == CANONICALIZED_OPTION]
    assert len(notes) == 1
    assert "--configs" in notes[0].message
    assert ast.options[-1].spec.long_name == "--configs"
    assert ast.options[-1].given == "--config"


def test_mutation_suite_has_sixty_cases():
    assert len(MUTATION_CASES) == 60
    assert len({name for name, *_ in MUTATION_CASES}) == 60


@pytest.mark.parametrize("name,line,strict,expected", MUTATION_CASES, ids=[c[0] for c in MUTATION_CASES])
def test_mutation_flips_expected_code(name, line, strict, expected):
    report = check_command(line, strict=strict)
    assert not report.executable
    assert report.errors[0].code == expected, (name, report.errors)


def test_base_command_valid_strict():
    report = check_command(BASE, strict=True)
    assert report.executable
    assert report.errors == []


def test_unknown_gin_warns_in_lenient_mode():
    line = BASE.replace("high_quality_terrain", "trailer_video")
    lenient = check_command(line, strict=False)
    assert lenient.executable
    assert any(w.code == UNKNOWN_GIN_FILE for w in lenient.warnings)
    strict = check_command(line, strict=True)
    assert not strict.executable


def test_gin_name_accepted_with_and_without_suffix():
    for token in ("desert", "desert.gin"):
        report = check_command(
            f"python -m Infinigen.datagen.manage_jobs --configs {token}", strict=True
        )
        assert report.executable, token


def test_negative_integer_is_a_value():
    ast = parse_command("python -m Infinigen.datagen.manage_jobs --meta_seed -5")
    assert ast.options[0].values == ["-5"]
    assert validate(ast).executable


def test_error_spans_point_at_tokens():
    with pytest.raises(CommandParseError) as err:
        parse_command("python -m Infinigen.datagen.manage_jobs --num_scenes")
    assert err.value.span == (3, 4)


def test_canonicalize_renames_prefixes():
    ast = parse_command(BASE.replace("--configs", "--config"))
    text = canonicalize(ast)
    assert "--configs high_quality_terrain" in text
    assert "--config " not in text + " "
    again = parse_command(text)
    assert canonicalize(again) == text


def test_canonicalize_collapses_whitespace():
    pairs = load_few_shots()
    rainy = pairs[4]["command"]
    assert "  " in rainy
    text = canonicalize(parse_command(rainy))
    assert "  " not in text


def test_canonicalize_rejects_invalid():
    ast = parse_command("python -m Infinigen.datagen.manage_jobs --cleanup sometimes")
    with pytest.raises(NotExecutable):
        canonicalize(ast)


def test_canonicalize_bare_head():
    ast = parse_command("python -m Infinigen.datagen.manage_jobs")
    assert canonicalize(ast) == "python -m Infinigen.datagen.manage_jobs"


@given(st.integers(min_value=0, max_value=200))
def test_generated_commands_parse_clean(seed):
    line = generate_command(seed)
    report = check_command(line, strict=True)
    assert report.executable, (line, report.errors)


@given(st.integers(min_value=0, max_value=100))
def test_generated_commands_round_trip(seed):
    line = generate_command(seed)
    ast = parse_command(line)
    text = canonicalize(ast)
    again = parse_command(text)
    assert [(o.spec.long_name, o.values) for o in again.options] == [
        (o.spec.long_name, o.values) for o in ast.options
    ]
    assert canonicalize(again) == text


def test_added_option_flips_prefix_to_ambiguous():
    base = load_grammar()
    extended = Grammar(
        version=base.version,
        invocation=base.invocation,
        options=base.options
        + (OptionSpec(long_name="--configs_plus", arity="one_or_more", value_kind="token-list"),),
        whitelists=base.whitelists,
    )
    line = "python -m Infinigen.datagen.manage_jobs --config desert.gin"
    assert parse_command(line, base).options[0].spec.long_name == "--configs"
    with pytest.raises(CommandParseError) as err:
        parse_command(line, extended)
    assert err.value.code == AMBIGUOUS_PREFIX


def test_load_grammar_from_path(tmp_path):
    raw = resources.files("sceneloom.data").joinpath("grammar.json").read_text("utf-8")
    p = tmp_path / "g.json"
    p.write_text(raw)
    grammar = load_grammar(p)
    assert grammar.invocation_head == "python -m Infinigen.datagen.manage_jobs"
    p.write_text('{"format": "nope"}')
    with pytest.raises(ValueError):
        load_grammar(p)
