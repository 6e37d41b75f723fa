from dcavity_figures import cli


class TestCli:
    def test_single_figure(self, csv_dir, tmp_path, capsys):
        rc = cli.main(["fig2", "--in", str(csv_dir), "--out", str(tmp_path)])
        assert rc == 0
        out = capsys.readouterr().out
        assert "fig2.png" in out and "fig2.svg" in out

    def test_all(self, csv_dir, tmp_path):
        assert cli.main(["all", "--in", str(csv_dir), "--out", str(tmp_path)]) == 0
        assert len(list(tmp_path.glob("*.png"))) == 5
        assert len(list(tmp_path.glob("*.svg"))) == 5

    def test_unknown_name(self, tmp_path, capsys):
        rc = cli.main(["fig9", "--in", str(tmp_path), "--out", str(tmp_path)])
        assert rc == 1
        assert "fig9" in capsys.readouterr().err

    def test_missing_csv(self, tmp_path, capsys):
        rc = cli.main(["fig2", "--in", str(tmp_path), "--out", str(tmp_path)])
        assert rc == 1
        assert "fig2.csv" in capsys.readouterr().err
