from unittest.mock import Mock, patch

import matplotlib.pyplot as plt
import pytest

from arbolcausal.graficos import configurar_estilo_grafico, plot_depth_histogram, plot_sweep
from arbolcausal.metricas import SweepCell, SweepTable, WeightMethod
from arbolcausal.tripletas import StatsReport


@pytest.fixture
def tabla():
    return SweepTable(
        correlation="pearson",
        cases=6,
        cells=[
            SweepCell(method=WeightMethod.RECIPROCAL, c=2.0, correlation=0.91),
            SweepCell(method=WeightMethod.RECIPROCAL, c=0.5, correlation=0.84),
            SweepCell(method=WeightMethod.EXPONENTIAL, c=2.0, correlation=0.88),
            SweepCell(method=WeightMethod.NONE, correlation=0.29),
            SweepCell(method=WeightMethod.EXPONENTIAL, c=0.5, correlation=None),
        ],
    )


@pytest.fixture(autouse=True)
def cerrar_figuras():
    yield
    plt.close("all")


class TestConfiguracionGraficos:
    """Tests for graphics configuration."""

    @patch("matplotlib.pyplot.style.use")
    @patch("matplotlib.pyplot.rcParams", {})
    def test_configurar_estilo_grafico(self, mock_style_use):
        configurar_estilo_grafico()
        mock_style_use.assert_called_once_with("seaborn-v0_8-darkgrid")


class TestPlotSweep:
    """Tests for the sweep plot."""

    @patch("matplotlib.pyplot.show")
    @patch("matplotlib.pyplot.subplots")
    def test_one_line_per_method_and_baseline(self, mock_subplots, mock_show, tabla):
        mock_fig, mock_ax = Mock(), Mock()
        mock_subplots.return_value = (mock_fig, mock_ax)

        plot_sweep(tabla)

        mock_show.assert_called_once()
        assert mock_ax.plot.call_count == 2
        mock_ax.axhline.assert_called_once()
        assert mock_ax.axhline.call_args.args[0] == 0.29
        xs = mock_ax.plot.call_args_list[0].args[0]
        assert list(xs) == [0.5, 2.0]

    def test_saves_to_file(self, tmp_path, tabla):
        ruta = tmp_path / "barrido.png"
        fig = plot_sweep(tabla, ruta)
        assert ruta.exists() and ruta.stat().st_size > 0
        assert fig.axes[0].get_xscale() == "log"

    def test_without_weighted_cells(self):
        solo_base = SweepTable(cells=[SweepCell(method=WeightMethod.NONE, correlation=0.5)])
        with pytest.raises(ValueError, match="celdas ponderadas"):
            plot_sweep(solo_base)


class TestPlotDepthHistogram:
    """Tests for the depth histogram."""

    def test_grouped_bars(self, tmp_path):
        informes = {
            "gold": StatsReport(cases=1, depth_histogram={0: 1, 1: 3, 2: 4, 3: 2}),
            "sistema": StatsReport(cases=1, depth_histogram={0: 1, 1: 2}),
        }
        ruta = tmp_path / "profundidades.png"
        fig = plot_depth_histogram(informes, ruta)
        assert ruta.exists()
        ax = fig.axes[0]
        assert len(ax.patches) == 8
        assert [t.get_text() for t in ax.get_xticklabels()] == ["0", "1", "2", "3"]

    @patch("matplotlib.pyplot.show")
    def test_shows_when_no_path(self, mock_show):
        plot_depth_histogram({"gold": StatsReport(cases=1, depth_histogram={0: 1})})
        mock_show.assert_called_once()

    def test_empty(self):
        with pytest.raises(ValueError):
            plot_depth_histogram({})
