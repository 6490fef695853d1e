from .graficador import configurar_estilo_grafico, plot_sweep, plot_depth_histogram

__all__ = ["configurar_estilo_grafico", "plot_sweep", "plot_depth_histogram"]
