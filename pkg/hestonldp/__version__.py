__title__ = "hestonldp"
__description__ = "Large deviations of the Heston model: limiting cgf, rate functions and Monte Carlo verification."
__version__ = "0.1.0"
