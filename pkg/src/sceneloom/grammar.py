"""Scene-generation command language: parse, validate, canonicalize.

The option table and the two gin-file whitelists live in a versioned data
file (``data/grammar.json``); logic here never hard-codes option names.
Validation is static: a command is "executable" when it satisfies every
documented constraint, not because anything was run.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

# error and warning codes
BAD_PREFIX = "BadPrefix"
NOT_SINGLE_LINE = "NotSingleLine"
UNKNOWN_OPTION = "UnknownOption"
AMBIGUOUS_PREFIX = "AmbiguousPrefix"
MISSING_VALUE = "MissingValue"
BAD_ENUM_VALUE = "BadEnumValue"
NOT_AN_INTEGER = "NotAnInteger"
UNKNOWN_GIN_FILE = "UnknownGinFile"
MALFORMED_OVERRIDE = "MalformedOverride"
CANONICALIZED_OPTION = "CanonicalizedOption"

_INTEGER_RE = re.compile(r"^[+-]?\d+$")
_OVERRIDE_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*(\.[A-Za-z_][A-Za-z0-9_]*)*=.+$")


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    span: tuple[int, int] | None = None  # token index range [start, end)


class CommandParseError(Exception):
    def __init__(self, code: str, message: str, span: tuple[int, int] | None = None):
        self.code = code
        self.span = span
        super().__init__(f"{code}: {message}")

    def as_diagnostic(self) -> Diagnostic:
        return Diagnostic(self.code, str(self), self.span)


class NotExecutable(Exception):
    """Canonicalization requested for a command that fails validation."""


@dataclass(frozen=True)
class OptionSpec:
    long_name: str
    short_name: str | None = None
    arity: str = "one"  # flag | one | one_or_more
    value_kind: str | None = None  # path | integer | enum | token-list | key=value-list
    enum_values: tuple[str, ...] | None = None
    whitelist: str | None = None  # whitelist tag for config-file options


@dataclass
class Grammar:
    version: int
    invocation: tuple[str, ...]
    options: tuple[OptionSpec, ...]
    whitelists: dict[str, frozenset[str]]

    @property
    def invocation_head(self) -> str:
        return " ".join(self.invocation)

    def find_long(self, name: str) -> OptionSpec | None:
        for opt in self.options:
            if opt.long_name == name:
                return opt
        return None


@dataclass
class BoundOption:
    spec: OptionSpec
    given: str
    values: list[str] = field(default_factory=list)
    span: tuple[int, int] | None = None


@dataclass
class CommandAst:
    prefix: tuple[str, ...]
    options: list[BoundOption] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)


@dataclass
class ValidationReport:
    executable: bool
    errors: list[Diagnostic] = field(default_factory=list)
    warnings: list[Diagnostic] = field(default_factory=list)


_default_grammar: Grammar | None = None


def load_grammar(path: str | Path | None = None) -> Grammar:
    """Load the option table; the bundled data file when no path is given."""
    global _default_grammar
    if path is None and _default_grammar is not None:
        return _default_grammar
    if path is None:
        raw = resources.files("sceneloom.data").joinpath("grammar.json").read_text("utf-8")
    else:
        raw = Path(path).read_text("utf-8")
    data = json.loads(raw)
    if data.get("format") != "command-grammar":
        raise ValueError(f"not a command-grammar file: {path}")
    options = tuple(
        OptionSpec(
            long_name=entry["long"],
            short_name=entry.get("short"),
            arity=entry["arity"],
            value_kind=entry.get("value_kind"),
            enum_values=tuple(entry["enum_values"]) if "enum_values" in entry else None,
            whitelist=entry.get("whitelist"),
        )
        for entry in data["options"]
    )
    grammar = Grammar(
        version=data["version"],
        invocation=tuple(data["invocation"]),
        options=options,
        whitelists={tag: frozenset(names) for tag, names in data["whitelists"].items()},
    )
    if path is None:
        _default_grammar = grammar
    return grammar


def _looks_like_option(token: str) -> bool:
    if token.startswith("--"):
        return True
    # single dash: an option unless it reads as a negative number
    return token.startswith("-") and len(token) > 1 and not token[1].isdigit()


def _resolve_option(
    token: str, index: int, grammar: Grammar
) -> tuple[OptionSpec, Diagnostic | None]:
    if token.startswith("--"):
        exact = grammar.find_long(token)
        if exact is not None:
            return exact, None
        candidates = [o for o in grammar.options if o.long_name.startswith(token)]
        if len(candidates) == 1:
            spec = candidates[0]
            note = Diagnostic(
                CANONICALIZED_OPTION,
                f"{token} interpreted as {spec.long_name}",
                (index, index + 1),
            )
            return spec, note
        if len(candidates) > 1:
            names = ", ".join(o.long_name for o in candidates)
            raise CommandParseError(
                AMBIGUOUS_PREFIX,
                f"{token} matches several options: {names}",
                (index, index + 1),
            )
        raise CommandParseError(UNKNOWN_OPTION, f"unknown option {token}", (index, index + 1))
    for opt in grammar.options:
        if opt.short_name == token:
            return opt, None
    raise CommandParseError(UNKNOWN_OPTION, f"unknown option {token}", (index, index + 1))


def parse_command(line: str, grammar: Grammar | None = None) -> CommandAst:
    """Bind a single command line to the option table.

    Unambiguous long-option prefixes are accepted and canonicalized with a
    warning. Multi-value options consume tokens until the next option-like
    token.
    """
    grammar = grammar or load_grammar()
    text = line.strip()
    if "\n" in text or "\r" in text:
        raise CommandParseError(NOT_SINGLE_LINE, "command must be a single line")
    tokens = text.split()
    head = grammar.invocation
    if tuple(tokens[: len(head)]) != head:
        raise CommandParseError(
            BAD_PREFIX,
            f"command must start with {grammar.invocation_head!r}",
            (0, min(len(tokens), len(head))),
        )
    ast = CommandAst(prefix=head)
    i = len(head)
    n = len(tokens)
    while i < n:
        token = tokens[i]
        if not _looks_like_option(token):
            raise CommandParseError(
                UNKNOWN_OPTION, f"unexpected positional token {token!r}", (i, i + 1)
            )
        spec, note = _resolve_option(token, i, grammar)
        if note is not None:
            ast.diagnostics.append(note)
        start = i
        i += 1
        values: list[str] = []
        if spec.arity == "flag":
            pass
        elif spec.arity == "one":
            if i >= n or _looks_like_option(tokens[i]):
                raise CommandParseError(
                    MISSING_VALUE, f"{spec.long_name} requires a value", (start, i)
                )
            values.append(tokens[i])
            i += 1
        else:  # one_or_more
            while i < n and not _looks_like_option(tokens[i]):
                values.append(tokens[i])
                i += 1
            if not values:
                raise CommandParseError(
                    MISSING_VALUE, f"{spec.long_name} requires at least one value", (start, i)
                )
        ast.options.append(BoundOption(spec=spec, given=token, values=values, span=(start, i)))
    return ast


def _check_gin_token(token: str, tag: str, grammar: Grammar) -> bool:
    name = token if token.endswith(".gin") else token + ".gin"
    return name in grammar.whitelists.get(tag, frozenset())


def validate(
    ast: CommandAst, grammar: Grammar | None = None, strict: bool = False
) -> ValidationReport:
    """Check documented value constraints; executable iff no errors.

    Unknown gin files are warnings in lenient mode (the prompt allows writing
    new ones) and errors in strict mode.
    """
    grammar = grammar or load_grammar()
    errors: list[Diagnostic] = []
    warnings: list[Diagnostic] = list(ast.diagnostics)
    for bound in ast.options:
        spec = bound.spec
        if spec.value_kind == "integer":
            for value in bound.values:
                if not _INTEGER_RE.match(value):
                    errors.append(
                        Diagnostic(
                            NOT_AN_INTEGER,
                            f"{spec.long_name} expects an integer, got {value!r}",
                            bound.span,
                        )
                    )
        elif spec.value_kind == "enum":
            allowed = spec.enum_values or ()
            for value in bound.values:
                if value not in allowed:
                    errors.append(
                        Diagnostic(
                            BAD_ENUM_VALUE,
                            f"{spec.long_name} must be one of {','.join(allowed)};"
                            f" got {value!r}",
                            bound.span,
                        )
                    )
        elif spec.value_kind == "key=value-list":
            for value in bound.values:
                if not _OVERRIDE_RE.match(value):
                    errors.append(
                        Diagnostic(
                            MALFORMED_OVERRIDE,
                            f"{spec.long_name} entries must look like"
                            f" name.attr=value; got {value!r}",
                            bound.span,
                        )
                    )
        if spec.whitelist:
            for value in bound.values:
                if not _check_gin_token(value, spec.whitelist, grammar):
                    note = Diagnostic(
                        UNKNOWN_GIN_FILE,
                        f"{value!r} is not a documented {spec.whitelist} gin file",
                        bound.span,
                    )
                    if strict:
                        errors.append(note)
                    else:
                        warnings.append(note)
    return ValidationReport(executable=not errors, errors=errors, warnings=warnings)


def check_command(
    line: str, grammar: Grammar | None = None, strict: bool = False
) -> ValidationReport:
    """Parse then validate; parse failures become report errors."""
    grammar = grammar or load_grammar()
    try:
        ast = parse_command(line, grammar)
    except CommandParseError as err:
        return ValidationReport(executable=False, errors=[err.as_diagnostic()])
    return validate(ast, grammar, strict=strict)


def canonicalize(ast: CommandAst, grammar: Grammar | None = None) -> str:
    """Deterministic single-line rendering using canonical option names."""
    grammar = grammar or load_grammar()
    report = validate(ast, grammar)
    if not report.executable:
        raise NotExecutable("; ".join(d.message for d in report.errors))
    parts = list(ast.prefix)
    for bound in ast.options:
        parts.append(bound.spec.long_name)
        parts.extend(bound.values)
    return " ".join(parts)
