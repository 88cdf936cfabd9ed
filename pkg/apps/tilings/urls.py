"""
URL configuration for tilings app.
"""
from django.urls import include, path
from rest_framework.routers import SimpleRouter

from . import views

api_router = SimpleRouter()
api_router.register(r'', views.TilingViewSet, basename='tiling')

urlpatterns = [
    path('', include(api_router.urls)),
]
