"""两点 Gauss–Legendre 型 Riemann–Stieltjes 求积与误差界。"""

__version__ = "0.1.0"
