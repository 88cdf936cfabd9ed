"""
URL configuration for stabilizer app.
"""
from django.urls import path

from . import views

urlpatterns = [
    path('<str:name>/catalog/', views.CatalogView.as_view(), name='stabilizer-catalog'),
    path('<str:name>/verify/', views.VerifyView.as_view(), name='stabilizer-verify'),
    path('<str:name>/decompose/', views.DecomposeView.as_view(), name='stabilizer-decompose'),
    path('<str:name>/witness/', views.WitnessView.as_view(), name='stabilizer-witness'),
]
