"""Command-line batch pipelines.

Exit status: 0 when every line succeeded (or --keep-going was given),
1 when any input line or data record failed, 2 for configuration and
usage errors. --strict stops at the first failing line.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, TextIO

from clsfront.config import Pipeline, load_pipeline
from clsfront.errors import ConfigError, EvaluationError, FrontendError
from clsfront.evaluation import Design, fmt, fmt_raw, make_sheet, read_stimuli, summarize
from clsfront.mapper import SubstitutionPolicy, format_record, oov_profile
from clsfront.parser import LabelSequence, parse_label_line, parse_mixed
from clsfront.router import VoiceProfile, load_voice_manifest, read_relative, route_utterance

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


@dataclass(frozen=True)
class InputLine:
    lineno: int
    utt_id: str
    text: str


@dataclass(frozen=True)
class LineResult:
    lineno: int
    utt_id: str
    output: str | None = None
    log: tuple[str, ...] = ()
    error: str | None = None


def _valid_utt_id(utt_id: str) -> bool:
    return bool(utt_id) and all(ch.isprintable() and not ch.isspace() for ch in utt_id)


def read_input(data: bytes) -> Iterator[InputLine | LineResult]:
    """Split raw bytes into ``utt_id<TAB>text`` lines; bad lines come back as failures."""
    for lineno, raw in enumerate(data.split(b"\n"), start=1):
        if raw.endswith(b"\r"):
            raw = raw[:-1]
        if not raw.strip():
            continue
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            yield LineResult(lineno, "-", error=f"invalid UTF-8 at byte {exc.start}")
            continue
        utt_id, sep, text = line.partition("\t")
        if not sep:
            yield LineResult(lineno, "-", error="expected utt_id<TAB>text")
        elif not _valid_utt_id(utt_id):
            yield LineResult(lineno, "-", error="utterance id must be non-empty printable text without whitespace")
        else:
            yield InputLine(lineno, utt_id, text)


# per-process state for --jobs workers
_WORKER: dict = {}


def _init_worker(config_path: str | None, kwargs: dict) -> None:
    _WORKER["pipeline"] = _configure(load_pipeline(config_path), kwargs)
    _WORKER["kwargs"] = kwargs


def _configure(pipe: Pipeline, kwargs: dict) -> Pipeline:
    only = kwargs.get("only")
    if only:
        voices = tuple(v for v in pipe.voices if v.native_language in only or v.voice_id in only)
        if not voices:
            raise ConfigError(f"--only {','.join(only)} matches no voice")
        pipe = Pipeline(pipe.config, pipe.frontend, voices, pipe.similarity, pipe.overrides)
    return pipe


def _do_parse(pipe: Pipeline, item: InputLine, kwargs: dict) -> LineResult:
    seq = parse_mixed(item.text, kwargs["primary"], pipe.frontend, utterance_id=item.utt_id)
    if not seq.tokens:
        raise FrontendError("no phones")
    return LineResult(item.lineno, item.utt_id, seq.to_line())


def _do_route(pipe: Pipeline, item: InputLine, kwargs: dict) -> LineResult:
    voice, seq, records = route_utterance(item.text, kwargs["primary"], pipe.voices, pipe.similarity,
                                          pipe.frontend, policy=kwargs["policy"], overrides=pipe.overrides,
                                          utterance_id=item.utt_id)
    if not seq.tokens:
        raise FrontendError("no phones left after mapping")
    line = f"{item.utt_id}\t{voice.voice_id}\t{' '.join(seq.tokens)}"
    return LineResult(item.lineno, item.utt_id, line, tuple(format_record(item.utt_id, r) for r in records))


_TASKS: dict[str, Callable[[Pipeline, InputLine, dict], LineResult]] = {"parse": _do_parse, "route": _do_route}


def _run_one(pipe: Pipeline, task: str, item: InputLine | LineResult, kwargs: dict) -> LineResult:
    if isinstance(item, LineResult):
        return item
    try:
        return _TASKS[task](pipe, item, kwargs)
    except FrontendError as exc:
        return LineResult(item.lineno, item.utt_id, error=str(exc))


def _worker_run(args: tuple[str, InputLine | LineResult]) -> LineResult:
    task, item = args
    return _run_one(_WORKER["pipeline"], task, item, _WORKER["kwargs"])


def process(pipe: Pipeline, task: str, items: Iterable[InputLine | LineResult], kwargs: dict, *,
            jobs: int = 1, config_path: str | None = None) -> Iterator[LineResult]:
    """Run ``task`` over input lines, yielding results in input order."""
    if jobs <= 1:
        for item in items:
            yield _run_one(pipe, task, item, kwargs)
        return
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(config_path, kwargs)) as ex:
        yield from ex.map(_worker_run, ((task, it) for it in items), chunksize=64)


def _open_out(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="\n")


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None


def _run_batch(args: argparse.Namespace, task: str) -> int:
    pipe = _configure(load_pipeline(args.config), {"only": _split(args.only)})
    kwargs = {
        "primary": args.primary_lang or pipe.config.primary_language,
        "policy": SubstitutionPolicy(getattr(args, "policy", None) or pipe.config.policy),
        "only": _split(args.only),
    }
    data = _read_bytes(args.input)
    failed = 0
    out = _open_out(args.out)
    err = _open_out(args.errors) if args.errors else sys.stderr
    log = _open_out(args.log) if getattr(args, "log", None) else None
    try:
        for res in process(pipe, task, read_input(data), kwargs, jobs=args.jobs, config_path=args.config):
            if res.error is not None:
                failed += 1
                err.write(f"{res.utt_id}\tline {res.lineno}\t{res.error}\n")
                if args.strict:
                    break
                continue
            out.write(res.output + "\n")
            if log is not None:
                for line in res.log:
                    log.write(line + "\n")
    finally:
        for fh in (out, err, log):
            if fh is not None and fh not in (sys.stdout, sys.stderr):
                fh.close()
    if failed and (args.strict or not args.keep_going):
        return EXIT_FAILED
    return EXIT_OK


def _split(value: str | None) -> tuple[str, ...]:
    return tuple(v.strip() for v in value.split(",") if v.strip()) if value else ()


def cmd_parse(args: argparse.Namespace) -> int:
    return _run_batch(args, "parse")


def cmd_route(args: argparse.Namespace) -> int:
    return _run_batch(args, "route")


def read_label_file(data: bytes) -> list[LabelSequence]:
    """Label lines ``utt_id<TAB>labels``; routed lines with a voice column are accepted too."""
    seqs = []
    for lineno, raw in enumerate(data.split(b"\n"), start=1):
        raw = raw.rstrip(b"\r")
        if not raw.strip():
            continue
        try:
            line = raw.decode("utf-8")
            cols = line.split("\t")
            if len(cols) == 3:
                line = f"{cols[0]}\t{cols[2]}"
            seqs.append(parse_label_line(line))
        except (UnicodeDecodeError, ValueError) as exc:
            raise EvaluationError(f"bad label line: {exc}", line=lineno) from None
    if not seqs:
        raise EvaluationError("label file is empty")
    return seqs


def coverage_report(seqs: Sequence[LabelSequence], voices: Sequence[VoiceProfile]) -> str:
    """Per-voice OOV rate and missing-phone histogram over a whole label file."""
    corpus = LabelSequence(tuple(t for s in seqs for t in s.phones))
    if not corpus.tokens:
        raise EvaluationError("label file has no phones")
    lines = ["voice_id\tlanguage\tphones\toov\toov_rate\toov_exact\tmissing"]
    for v in voices:
        hist, rate = oov_profile(corpus, v.phone_labels)
        missing = ",".join(f"{lab}:{n}" for lab, n in hist.items()) or "-"
        lines.append(f"{v.voice_id}\t{v.native_language}\t{len(corpus)}\t{sum(hist.values())}\t"
                     f"{fmt(rate, 4)}\t{fmt_raw(rate)}\t{missing}")
    return "\n".join(lines) + "\n"


def cmd_report(args: argparse.Namespace) -> int:
    pipe = _configure(load_pipeline(args.config), {"only": _split(args.only)})
    voices = pipe.voices
    if args.voices:
        try:
            text = _read_bytes(args.voices).decode("utf-8")
            voices = tuple(load_voice_manifest(text, pipe.inventory,
                                               read_relative(os.path.dirname(os.path.abspath(args.voices)))))
        except (UnicodeDecodeError, FrontendError) as exc:
            raise ConfigError(f"{args.voices}: {exc}") from None
    try:
        seqs = read_label_file(_read_bytes(args.input))
        for seq in seqs:
            for tok in seq.phones:
                if tok not in pipe.inventory:
                    raise EvaluationError(f"{seq.utterance_id}: label {tok!r} is not in the CLS superset")
        report = coverage_report(seqs, voices)
    except EvaluationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILED
    _write(args.out, report)
    return EXIT_OK


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _decode(data: bytes, path: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EvaluationError(f"{path}: invalid UTF-8 at byte {exc.start}") from None


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        _, human, tsv = summarize(_decode(_read_bytes(args.input), args.input), args.design)
    except EvaluationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILED
    sys.stdout.write(human)
    if args.out:
        _write(args.out, tsv)
    else:
        sys.stdout.write("\n" + tsv)
    return EXIT_OK


def cmd_sheet(args: argparse.Namespace) -> int:
    try:
        design, items = read_stimuli(_decode(_read_bytes(args.input), args.input))
        if args.design and Design(args.design) is not design:
            raise EvaluationError(f"stimulus file is {design.value}, expected {args.design}")
        rows = make_sheet(items, design, args.seed)
    except EvaluationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILED
    header = "position\titem_id" + ("\tA\tX\tY" if design is Design.AXY else "")
    text = header + "\n" + "".join(r.to_line() + "\n" for r in rows)
    _write(args.out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clsfront", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="pipeline config file (default: bundled tables)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    def batch(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("input", help="utt_id<TAB>text lines, '-' for stdin")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--errors", help="failed-line report (default stderr)")
        p.add_argument("--primary-lang", help="language of the utterances (default from config)")
        p.add_argument("--only", help="comma-separated voice ids or languages to route among")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--strict", action="store_true", help="stop at the first failing line")
        mode.add_argument("--keep-going", action="store_true", help="exit 0 even if some lines failed")
        p.add_argument("--jobs", type=int, default=1, help="worker processes; output order is preserved")
        return p

    batch("parse", "text to CLS label file").set_defaults(func=cmd_parse)
    p = batch("route", "text to routed, voice-covered label file")
    p.add_argument("--policy", choices=[x.value for x in SubstitutionPolicy],
                   help="substitution policy (default from config)")
    p.add_argument("--log", help="substitution log file")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("report", parents=[common], help="per-voice phone coverage of a label file")
    p.add_argument("input")
    p.add_argument("--voices", help="voice manifest (default from config)")
    p.add_argument("--only", help="comma-separated voice ids or languages")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("eval", parents=[common], help="summarize a ratings file")
    p.add_argument("input")
    p.add_argument("--design", choices=[d.value for d in Design], help="require this design")
    p.add_argument("--out", help="write the TSV summary here")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sheet", parents=[common], help="randomized presentation sheet")
    p.add_argument("input", help="stimulus list whose first line names the design")
    p.add_argument("--design", choices=[d.value for d in Design])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sheet)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("error: --jobs must be at least 1\n")
        return EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
