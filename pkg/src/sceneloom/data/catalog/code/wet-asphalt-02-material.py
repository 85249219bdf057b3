"""Wet Asphalt 02 Material generator (Materials)."""

PARAMS = {
    "size": 2.509,
    "detail": 4,
    "roughness": 0.131,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
