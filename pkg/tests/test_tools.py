"""Tests for the maintenance scripts in tools/."""

import importlib.util
import os
import sys
from pathlib import Path

import pytest

from afsa.frame_io import load_frame
from tests.strategies import FRAMES

TOOLS = Path(__file__).resolve().parent.parent / 'tools'


def load_tool(name):
    spec = importlib.util.spec_from_file_location(name, TOOLS / f'{name}.py')
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def test_check_corpus_passes_bundled_frames():
    """Test that every bundled frame passes the corpus check."""
    tool = load_tool('check_corpus')
    for path in sorted(FRAMES.glob('*.af')):
        ok, message = tool.check_file(path, None)
        assert ok, message
        assert message.startswith('PASS')


def test_check_corpus_reports_bad_files(tmp_path):
    """Test that unreadable documents fail the check."""
    tool = load_tool('check_corpus')
    bad = tmp_path / 'bad.af'
    bad.write_text('frame hlaf\narg a\narg a\n', encoding='utf-8')
    ok, message = tool.check_file(bad, None)
    assert not ok
    assert 'redeclaration of a' in message


def test_export_regression_suite(tmp_path, monkeypatch, capsys):
    """Test exporting a small suite that parses back."""
    tool = load_tool('export_regression_suite')
    monkeypatch.setattr(sys, 'argv', ['export', '--out', str(tmp_path), '--size', '10', '--kind', 'hsaf'])
    tool.main()
    paths = sorted(tmp_path.glob('*.af'))
    assert len(paths) == 10
    assert all(load_frame(str(path)).kind.value == 'hsaf' for path in paths)
    assert 'Wrote 10 frameworks' in capsys.readouterr().out


def test_check_corpus_rejects_empty_directory(tmp_path, monkeypatch):
    """Test that a directory without frame documents is an error."""
    tool = load_tool('check_corpus')
    monkeypatch.setattr(sys, 'argv', ['check', str(tmp_path)])
    with pytest.raises(FileNotFoundError):
        tool.main()


def test_check_corpus_exit_status(tmp_path, monkeypatch, capsys):
    """Test exit 0 on the bundled frames and exit 1 once a file fails."""
    tool = load_tool('check_corpus')
    monkeypatch.setattr(sys, 'argv', ['check', str(FRAMES)])
    with pytest.raises(SystemExit) as info:
        tool.main()
    assert info.value.code == 0

    (tmp_path / 'good.af').write_text('frame daf\narg a\n', encoding='utf-8')
    (tmp_path / 'bad.af').write_text('frame daf\narg a\narg a\n', encoding='utf-8')
    monkeypatch.setattr(sys, 'argv', ['check', str(tmp_path)])
    with pytest.raises(SystemExit) as info:
        tool.main()
    assert info.value.code == 1
    assert '1/2 files passed' in capsys.readouterr().out


def test_run_acceptance_suite_sets_scale(monkeypatch, capsys):
    """Test that the acceptance runner raises the scale before handing over to pytest."""
    tool = load_tool('run_acceptance_suite')
    monkeypatch.setenv('AFSA_PROPERTY_SCALE', '1.0')
    calls = []

    def fake_main(args):
        calls.append((args, os.environ['AFSA_PROPERTY_SCALE']))
        return 0

    monkeypatch.setattr(tool.pytest, 'main', fake_main)
    monkeypatch.setattr(sys, 'argv', ['run', '-x'])
    with pytest.raises(SystemExit) as info:
        tool.main()
    assert info.value.code == 0
    (args, scale), = calls
    assert scale == '5.0'
    assert args[0].endswith('tests') and args[1:] == ['-x']
    assert 'AFSA_PROPERTY_SCALE=5.0' in capsys.readouterr().out
