from spectral_gate.selftest import run_battery


def test_quick_battery_is_green(capsys):
    results = run_battery(quick=True)
    failures = [r for r in results if not r.ok]
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
    assert not failures, failures


def test_cli_selftest_exit_code():
    from spectral_gate.cli import main

    assert main(["selftest", "--quick"]) == 0
