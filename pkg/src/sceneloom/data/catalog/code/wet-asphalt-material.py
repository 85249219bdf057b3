"""Wet Asphalt Material generator (Materials)."""

PARAMS = {
    "size": 1.853,
    "detail": 3,
    "roughness": 0.239,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt Material"
    for key, value in params.items():
        node[key] = value
    return node
