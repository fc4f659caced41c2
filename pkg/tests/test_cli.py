from __future__ import annotations

import pathlib
import subprocess
import sys

from dgcipher import generate_keyset, parse_keyset, serialize_keyset, shift_encrypt

CMD = [sys.executable, "-m", "dgcipher.cli"]


def run(*args: str, stdin: bytes = b"") -> tuple[int, bytes, bytes]:
    done = subprocess.run([*CMD, *args], input=stdin, capture_output=True)
    return done.returncode, done.stdout, done.stderr


class TestCascadeCommands:
    def test_encrypt_with_builtin_keyset(self):
        code, out, err = run("encrypt", "--key", "paper", stdin="AA".encode())
        assert (code, err) == (0, b"")
        assert out.decode() == "VĞ"

    def test_index_mode_flag(self):
        code, out, _ = run(
            "encrypt", "--key", "paper", "--index-mode", "letters-only",
            stdin="A A".encode(),
        )
        assert code == 0
        assert out.decode() == "V Ğ"

    def test_pipe_roundtrip_is_byte_exact(self):
        message = "İstanbul'da sağanak!\r\nikinci satır; çöüğış 😀 3.14\n\nson".encode()
        code, encrypted, _ = run("encrypt", "--key", "paper", stdin=message)
        assert code == 0
        assert encrypted != message
        code, decrypted, _ = run("decrypt", "--key", "paper", stdin=encrypted)
        assert code == 0
        assert decrypted == message

    def test_file_input_and_output(self, tmp_path: pathlib.Path):
        source = tmp_path / "plain.txt"
        target = tmp_path / "cipher.txt"
        source.write_text("Mikroişlemci", encoding="utf-8")
        code, out, _ = run(
            "encrypt", "--key", "paper", "--in", str(source), "--out", str(target)
        )
        assert (code, out) == (0, b"")
        assert target.read_text(encoding="utf-8") == "Frpfgrçaaınr"

    def test_verbose_notes_go_to_stderr(self):
        code, out, err = run("encrypt", "--key", "paper", "--verbose", stdin=b"AA")
        assert code == 0
        assert out.decode() == "VĞ"
        assert b"index mode" in err

    def test_generated_key_file_roundtrip(self, tmp_path: pathlib.Path):
        key_file = tmp_path / "test.keys"
        code, _, _ = run("keygen", "--seed", "7", "--out", str(key_file))
        assert code == 0
        message = "Gazi Üniversitesi".encode()
        code, encrypted, _ = run("encrypt", "--key", str(key_file), stdin=message)
        assert code == 0
        code, decrypted, _ = run("decrypt", "--key", str(key_file), stdin=encrypted)
        assert code == 0
        assert decrypted == message

    def test_missing_key_file(self, tmp_path: pathlib.Path):
        missing = tmp_path / "nope.keys"
        code, out, err = run("encrypt", "--key", str(missing), stdin=b"AA")
        assert code == 2
        assert out == b""
        assert b"nope.keys" in err

    def test_corrupt_key_file_names_the_row(self, tmp_path: pathlib.Path):
        text = serialize_keyset(generate_keyset(1))
        lines = text.splitlines()
        row = lines[6]
        lines[6] = row[:-1] + row[len("G2S3: ")]  # repeat the row's first letter
        bad = tmp_path / "bad.keys"
        bad.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code, _, err = run("encrypt", "--key", str(bad), stdin=b"AA")
        assert code == 2
        assert b"DuplicateLetter" in err
        assert b"G2S3" in err

    def test_invalid_utf8_input(self):
        code, _, err = run("encrypt", "--key", "paper", stdin=b"\xff\xfe\xa1")
        assert code == 2
        assert b"UTF-8" in err

    def test_usage_errors_exit_one(self):
        assert run()[0] == 1
        assert run("frobnicate")[0] == 1
        assert run("encrypt", stdin=b"AA")[0] == 1
        assert run("encrypt", "--key", "paper", "--index-mode", "words")[0] == 1


class TestKeygen:
    def test_deterministic_bytes(self):
        first = run("keygen", "--seed", "424242")
        second = run("keygen", "--seed", "424242")
        assert first == second
        assert first[0] == 0
        assert first[1].startswith(b"CASCADE-KEYS v1\n# rng: splitmix64\n")

    def test_output_parses_back(self):
        code, out, _ = run("keygen", "--seed", "31337")
        assert code == 0
        assert parse_keyset(out.decode()) == generate_keyset(31337)

    def test_seeds_differ(self):
        assert run("keygen", "--seed", "1")[1] != run("keygen", "--seed", "2")[1]

    def test_otp_length(self):
        code, out, _ = run("keygen", "--seed", "9", "--otp-length", "40")
        assert code == 0
        assert out.endswith(b"\n")
        assert len(out.decode().strip()) == 40

    def test_bad_seeds_are_usage_errors(self):
        assert run("keygen", "--seed", "-1")[0] == 1
        assert run("keygen", "--seed", str(2**64))[0] == 1
        assert run("keygen", "--seed", "ten")[0] == 1

    def test_keycheck(self):
        code, out, _ = run("keycheck", "--key", "paper")
        assert code == 0
        assert b"FINAL: ok" in out
        assert b"keyset ok" in out

    def test_keycheck_rejects_bad_file(self, tmp_path: pathlib.Path):
        bad = tmp_path / "bad.keys"
        bad.write_text("not a key file\n", encoding="utf-8")
        code, _, err = run("keycheck", "--key", str(bad))
        assert code == 2
        assert b"BadHeader" in err


class TestClassicalCommands:
    def test_shift(self):
        code, out, _ = run("classical", "shift", "--k", "3", stdin="Gazi".encode())
        assert code == 0
        assert out.decode() == "Içcl"

    def test_shift_decrypt(self):
        code, out, _ = run(
            "classical", "shift", "--k", "3", "--decrypt", stdin="Içcl".encode()
        )
        assert code == 0
        assert out.decode() == "Gazi"

    def test_shift_out_of_range_is_a_data_error(self):
        code, _, err = run("classical", "shift", "--k", "40", stdin=b"A")
        assert code == 2
        assert b"ShiftOutOfRange" in err

    def test_atbash(self):
        code, out, _ = run("classical", "atbash", stdin="Bugün".encode())
        assert code == 0
        assert out.decode() == "Ydsçj"

    def test_vigenere_default_alphabet(self):
        code, out, _ = run(
            "classical", "vigenere", "--key", "Kale", stdin=b"TaarruzDokuzda"
        )
        assert code == 0
        assert out == b"DalvbukHykfdna"

    def test_vigenere_turkish(self):
        message = "Hücum şafakta".encode()
        code, out, _ = run(
            "classical", "vigenere", "--key", "gizli", "--alphabet", "turkish29",
            stdin=message,
        )
        assert code == 0
        code, back, _ = run(
            "classical", "vigenere", "--key", "gizli", "--alphabet", "turkish29",
            "--decrypt", stdin=out,
        )
        assert code == 0
        assert back == message

    def test_playfair(self):
        code, out, _ = run(
            "classical", "playfair", "--keyword", "kriptografi", stdin="ODTÜ".encode()
        )
        assert code == 0
        assert out == b"ACPV\n"

    def test_polybius(self):
        code, out, _ = run("classical", "polybius", stdin="Gazi".encode())
        assert code == 0
        assert out == b"22-11-55-26"

    def test_polybius_custom_grid(self):
        code, out, _ = run(
            "classical", "polybius", "--grid", "KALEMS", "--rows", "2", "--cols", "3",
            stdin="elmas".encode(),
        )
        assert code == 0
        assert out == b"21-13-22-12-23"

    def test_polybius_partial_grid_flags_are_usage_errors(self):
        code, _, _ = run("classical", "polybius", "--grid", "KALEMS", stdin=b"a")
        assert code == 1

    def test_railfence(self):
        sentence = "Gazi Üniversitesi Teknik Eğitim Fakültesi".encode()
        code, out, _ = run("classical", "railfence", "--rails", "2", stdin=sentence)
        assert code == 0
        assert out.decode() == "GZÜİESTSTKİEİİFKLEİAİNVRİEİENKĞTMAÜTS\n"

    def test_scytale(self):
        code, out, _ = run(
            "classical", "scytale", "--circumference", "2", stdin=b"ABCDEF"
        )
        assert code == 0
        assert out == b"ADBECF\n"

    def test_empty_letters_means_empty_output(self):
        code, out, _ = run("classical", "railfence", "--rails", "3", stdin=b"?!")
        assert code == 0
        assert out == b""

    def test_vernam_inline_key(self):
        code, out, _ = run("classical", "vernam", "--key", "K", stdin=b"T")
        assert code == 0
        assert out == b"G"

    def test_vernam_key_file(self, tmp_path: pathlib.Path):
        key_file = tmp_path / "otp.key"
        code, out, _ = run("keygen", "--seed", "77", "--otp-length", "64")
        key_file.write_bytes(out)
        message = "Çok gizli mesaj".encode()
        code, encrypted, _ = run(
            "classical", "vernam", "--key-file", str(key_file), stdin=message
        )
        assert code == 0
        code, decrypted, _ = run(
            "classical", "vernam", "--key-file", str(key_file), "--decrypt",
            stdin=encrypted,
        )
        assert code == 0
        assert decrypted == message

    def test_vernam_requires_exactly_one_key_source(self):
        assert run("classical", "vernam", stdin=b"T")[0] == 1
        assert run(
            "classical", "vernam", "--key", "K", "--key-file", "x", stdin=b"T"
        )[0] == 1

    def test_vernam_short_key_is_a_data_error(self):
        code, _, err = run("classical", "vernam", "--key", "K", stdin=b"TT")
        assert code == 2
        assert b"KeyTooShort" in err


class TestAnalysisCommands:
    def test_analyze_text(self):
        code, out, _ = run("analyze", stdin="Akif kasaba gitti ve et aldı.".encode())
        assert code == 0
        lines = out.decode().splitlines()
        assert lines[0] == "letters: 23"
        assert any(line.startswith("A") and "0.217391" in line for line in lines)

    def test_analyze_records(self):
        code, out, _ = run(
            "analyze", "--format", "records", stdin="Akif kasaba gitti ve et aldı.".encode()
        )
        assert code == 0
        lines = out.decode().splitlines()
        assert len(lines) == 29
        letter, count, freq = lines[0].split("\t")
        assert (letter, count, freq) == ("A", "5", "0.217391")

    def test_analyze_without_letters_is_a_data_error(self):
        code, _, err = run("analyze", stdin=b"123")
        assert code == 2
        assert b"EmptyText" in err

    def test_crack_recovers_shift(self, corpus_path: pathlib.Path, corpus_text: str):
        ciphertext = shift_encrypt(corpus_text[:900], 7)
        code, out, err = run(
            "crack", "--reference", str(corpus_path), stdin=ciphertext.encode()
        )
        assert code == 0
        assert out == b"7\n"
        assert err == b""

    def test_crack_warns_on_short_input(self, corpus_path: pathlib.Path):
        code, out, err = run(
            "crack", "--reference", str(corpus_path), stdin="Kısa metin".encode()
        )
        assert code == 0
        assert b"low confidence" in err
        assert out.endswith(b"\n")

    def test_crack_verbose_lists_all_distances(self, corpus_path: pathlib.Path, corpus_text: str):
        ciphertext = shift_encrypt(corpus_text[:900], 4)
        code, out, err = run(
            "crack", "--reference", str(corpus_path), "--verbose",
            stdin=ciphertext.encode(),
        )
        assert code == 0
        assert out == b"4\n"
        assert len(err.decode().splitlines()) == 29

    def test_flatness_text(self, corpus_path: pathlib.Path, corpus_text: str):
        code, out, _ = run(
            "flatness", "--key", "paper", "--reference", str(corpus_path),
            stdin=corpus_text.encode(),
        )
        assert code == 0
        assert b"rank-match accuracy" in out

    def test_flatness_records(self, corpus_path: pathlib.Path, corpus_text: str):
        code, out, _ = run(
            "flatness", "--key", "paper", "--reference", str(corpus_path),
            "--format", "records", stdin=corpus_text.encode(),
        )
        assert code == 0
        assert len(out.decode().splitlines()) == 3 * 29 + 4

    def test_flatness_needs_a_long_text(self, corpus_path: pathlib.Path):
        code, _, err = run(
            "flatness", "--key", "paper", "--reference", str(corpus_path),
            stdin="Az harf".encode(),
        )
        assert code == 2
        assert b"TooShort" in err
