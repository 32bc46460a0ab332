from django.contrib import admin
from django.urls import path

# Only the admin is served; it browses recorded verification runs.
urlpatterns = [
    path("admin/", admin.site.urls),
]
